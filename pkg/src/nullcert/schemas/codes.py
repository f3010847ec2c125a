from enum import IntEnum


class ExitCode(IntEnum):
    """
    ExitCode 类。

    Process exit status of every nullcert command.
    """
    OK = 0
    # verified-false, "none <= Dmax", Lucas verdict zero
    NEGATIVE = 1
    # usage or parse error
    USAGE = 2
    # precondition failure (containment, field kind, cap)
    PRECONDITION = 3
