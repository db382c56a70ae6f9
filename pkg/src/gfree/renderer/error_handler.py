"""
報告錯誤處理器

收集報告中失敗的檢查（check.* 為 false）與執行時的例外，供 CLI 決定結束碼
"""

import logging
from typing import Iterable, List, Tuple

logger = logging.getLogger(__name__)


class ReportErrorHandler:
    """
    收集檢查失敗與例外

    Example:
        >>> handler = ReportErrorHandler()
        >>> handler.collect([("check.groebner", "false"), ("check.groebner.pair", "1,2")])
        >>> handler.failed_checks()
        ['check.groebner']
    """

    CHECK_PREFIX = "check."

    def __init__(self):
        self.errors: list = []

    def collect(self, records: Iterable[Tuple[str, str]]) -> None:
        """記下所有值為 false 的 check.* 鍵"""
        for key, value in records:
            if key.startswith(self.CHECK_PREFIX) and value == "false":
                self.errors.append({'type': 'check', 'key': key, 'message': f"{key} = false"})

    def handle(self, exception: Exception, context: str = "") -> str:
        """
        記錄例外

        Args:
            exception: 發生的例外
            context: 錯誤發生的上下文描述（CLI 傳入子命令名稱）

        Returns:
            str: 給使用者看的錯誤訊息
        """
        message = str(exception) or type(exception).__name__
        self.errors.append({
            'type': type(exception).__name__,
            'message': message,
            'context': context
        })
        logger.debug("%s 失敗（%s）: %s", context or "命令", type(exception).__name__, message)
        return message

    def failed_checks(self) -> List[str]:
        return [e['key'] for e in self.errors if e['type'] == 'check']

    def has_errors(self) -> bool:
        return len(self.errors) > 0
