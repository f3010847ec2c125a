from pydantic import BaseModel, Field
from typing import Any, Optional
from .codes import ExitCode


class ReturnResponse(BaseModel):
    '''
    Outcome of one CLI command.

    ``data`` is the text written to stdout; ``msg`` goes to stderr when the
    command did not succeed.
    '''
    code: int = Field(..., description='exit status, see ExitCode')
    msg: str = Field(..., description='status message')
    data: Optional[Any] = Field(default=None, description='rendered output')
    witness: Optional[str] = Field(default=None, description='witness point for precondition failures')

    @classmethod
    def ok(cls, data: Any = None, msg: str = "OK"):
        """
        执行 ok 相关逻辑。

        Args:
            data: Rendered output.
            msg: Status message.

        Returns:
            ReturnResponse: A success response.
        """
        return cls(code=int(ExitCode.OK), msg=msg, data=data)

    @classmethod
    def negative(cls, data: Any = None, msg: str = "negative"):
        """A computed "no" answer (exit 1); output is still written."""
        return cls(code=int(ExitCode.NEGATIVE), msg=msg, data=data)

    @classmethod
    def fail(cls, code: ExitCode, msg: str, data: Any = None, witness: Optional[str] = None):
        """
        执行 fail 相关逻辑。

        Args:
            code: Exit status.
            msg: Error description.
            data: Optional partial output.
            witness: Formatted witness point.

        Returns:
            ReturnResponse: A failure response.
        """
        return cls(code=int(code), msg=msg, data=data, witness=witness)

    @property
    def is_ok(self) -> bool:
        return self.code == ExitCode.OK
