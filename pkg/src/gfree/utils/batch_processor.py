"""
批次處理器

逐一（或以執行緒池並行）處理多個獨立工作，例如不同特化點上的 fiber 計算
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Sequence


class BatchProcessor:
    """
    批次處理多個獨立工作

    功能：
    - 依序或並行處理
    - 進度追蹤
    - 錯誤處理與繼續
    - 結果一律依輸入順序聚合

    Example:
        >>> processor = BatchProcessor(verbose=True, workers=2)
        >>> results = processor.process_items(points, compute_fiber, label=str)
        >>> results['success_count']
        3
    """

    def __init__(self, verbose: bool = False,
                 continue_on_error: bool = True,
                 workers: int = 1):
        """
        初始化批次處理器

        Args:
            verbose: 是否顯示詳細訊息
            continue_on_error: 遇到錯誤時是否繼續處理
            workers: 並行執行緒數（1 為依序處理）
        """
        self.verbose = verbose
        self.continue_on_error = continue_on_error
        self.workers = max(1, int(workers))
        self.logger = logging.getLogger(__name__)

    def process_items(self,
                      items: Sequence[Any],
                      process_func: Callable[[Any], Any],
                      label: Callable[[Any], str] = str) -> Dict[str, Any]:
        """
        批次處理工作

        Args:
            items: 工作列表
            process_func: 處理函數，簽章為 (item) -> result
            label: 產生日誌用名稱的函數

        Returns:
            dict: 處理結果統計
            {
                'success': [{'item': ..., 'result': ...}, ...],
                'failed': [{'item': ..., 'error': str, 'exception': Exception}, ...],
                'total': int,
                'success_count': int,
                'failed_count': int
            }
            success 與 failed 皆依輸入順序排列。
        """
        results = {
            'success': [],
            'failed': [],
            'total': len(items),
            'success_count': 0,
            'failed_count': 0
        }

        if self.verbose:
            self.logger.info(f"開始批次處理，共 {len(items)} 個工作")

        if self.workers > 1 and len(items) > 1:
            outcomes = self._run_parallel(items, process_func)
        else:
            outcomes = self._run_sequential(items, process_func, label)

        for i, (item, ok, value) in enumerate(outcomes, 1):
            if ok:
                results['success'].append({'item': item, 'result': value})
                results['success_count'] += 1
                if self.verbose:
                    self.logger.info(f"✓ [{i}/{len(items)}] {label(item)}")
            else:
                results['failed'].append({'item': item, 'error': str(value), 'exception': value})
                results['failed_count'] += 1
                self.logger.error(f"✗ [{i}/{len(items)}] {label(item)} - {value}")

        if self.verbose:
            self.logger.info(
                f"批次處理完成！成功: {results['success_count']}, "
                f"失敗: {results['failed_count']}"
            )

        return results

    def _run_sequential(self, items, process_func, label) -> List[tuple]:
        outcomes = []
        for i, item in enumerate(items, 1):
            if self.verbose:
                self.logger.info(f"[{i}/{len(items)}] 處理: {label(item)}")
            try:
                outcomes.append((item, True, process_func(item)))
            except Exception as e:
                outcomes.append((item, False, e))
                if not self.continue_on_error:
                    break
        return outcomes

    def _run_parallel(self, items, process_func) -> List[tuple]:
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(process_func, item) for item in items]
            outcomes = []
            for item, future in zip(items, futures):
                try:
                    outcomes.append((item, True, future.result()))
                except Exception as e:
                    outcomes.append((item, False, e))
                    if not self.continue_on_error:
                        break
        return outcomes
