"""
输出格式化器 - text / record / json / toml / yaml
"""

import json
from typing import Any, Dict

from ...sysio.render import format_record, plain_record
from ..common.utils import logger


class OutputFormatter:
    """输出格式化器"""

    @staticmethod
    def format_data(data: Dict[str, Any], format_type: str = 'record') -> str:
        """格式化数据

        Args:
            data: Flat record.
            format_type: ``record``, ``json``, ``toml`` or ``yaml``.

        Returns:
            str: Formatted text ending in a newline.

        Raises:
            ImportError: 缺少必要的依赖
            ValueError: 不支持的格式
        """
        logger.debug(f"formatting record as {format_type}")
        data = plain_record(data)
        if format_type == 'record':
            return format_record(data)
        if format_type == 'json':
            return OutputFormatter._format_json(data)
        if format_type == 'yaml':
            return OutputFormatter._format_yaml(data)
        if format_type == 'toml':
            return OutputFormatter._format_toml(data)
        raise ValueError(f"unsupported format: {format_type}")

    @staticmethod
    def _format_json(data: Any) -> str:
        """格式化为 JSON"""
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def _format_yaml(data: Any) -> str:
        """格式化为 YAML"""
        try:
            import yaml
        except ImportError:
            error_msg = "YAML output needs pyyaml: pip install 'nullcert[cli]'"
            logger.error(error_msg)
            raise ImportError(error_msg)
        return yaml.dump(data, default_flow_style=False, allow_unicode=True, sort_keys=False, indent=2)

    @staticmethod
    def _format_toml(data: Any) -> str:
        """格式化为 TOML"""
        import toml
        return toml.dumps(data)
