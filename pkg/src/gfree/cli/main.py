"""
CLI 主程式

Usage:
    gfree [--config FILE] [--machine] [-v] gb FILE [--fuel N] [--check]
    gfree initial FILE
    gfree witness FILE [--refine]
    gfree reduce FILE --target EXPR
    gfree stdmon FILE [--bound D]
    gfree hilbert FILE [--bound D]
    gfree fibers FILE [--points LIST] [--bound D]
    gfree homogenize FILE [--check]
    gfree frobcheck FILE --e E
    gfree sqfree FILE
    gfree det --m M --n N --t T [--ring R] [--coeffs FILE] [--points LIST] [--bound D] [--sharp]
    gfree format FILE
    gfree info

FILE 為 '-' 時從 stdin 讀取。報告輸出到 stdout，日誌與錯誤訊息輸出到 stderr。
結束碼：0 成功、1 檢查失敗、2 輸入錯誤、3 fuel 用盡。
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional

# 守門員：Windows cp950 上避免輸出 Unicode 符號時噴例外
if hasattr(sys.stdout, "reconfigure"):
    try:
        sys.stdout.reconfigure(encoding="utf-8")
    except (ValueError, AttributeError):
        pass
if hasattr(sys.stderr, "reconfigure"):
    try:
        sys.stderr.reconfigure(encoding="utf-8")
    except (ValueError, AttributeError):
        pass

import yaml

from .. import __version__
from ..charp import CharpError, frobenius_initial_check, squarefree_report
from ..coeff import CoeffError
from ..config import ConfigError, ConfigLoader
from ..degeneration import DegenerationError, degeneration_check, homogenize
from ..detgen import DeterminantalError, build_instance, verify_instance
from ..freeness import (
    FreenessError,
    default_points,
    fiber_compare,
    generic_table,
    hilbert_function,
    parse_point,
    standard_monomials,
    witness,
)
from ..gb import (
    FuelExhaustedError,
    GroebnerError,
    buchberger,
    check_groebner,
    certify,
    initial_module,
    reduce,
)
from ..parser import (
    ProblemFile,
    ProblemParseError,
    ProblemParser,
    format_problem,
    parse_coefficient,
    parse_domain,
    parse_element,
)
from ..poly import FreeElem, PolyError, format_monomial
from ..renderer import ReportErrorHandler, collect_records, render_report
from ..utils import FileUtils
from ..validator import SchemaValidator

__all__ = ["create_parser", "cli", "main", "setup_logging"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_FUEL_EXHAUSTED = 3

INPUT_ERRORS = (
    ProblemParseError,
    FileNotFoundError,
    ConfigError,
    CoeffError,
    PolyError,
    FreenessError,
    DegenerationError,
    CharpError,
    DeterminantalError,
    yaml.YAMLError,
)

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False, log_file: Optional[str] = None,
                  level: str = "WARNING") -> None:
    """設定日誌（stdout 保留給報告，日誌一律寫到 stderr）"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level, logging.WARNING),
        format='[%(levelname)s] %(message)s',
        handlers=handlers,
        force=True,
    )


def _error(message: str) -> None:
    print(f"❌ 錯誤：{message}", file=sys.stderr)


# ----------------------------------------------------------------- argparse


def _add_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="問題檔路徑（'-' 表示 stdin）")


def _add_bound(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--bound", type=int, default=None,
                        help="最高次數（預設取設定檔 freeness.default_bound）")


def _add_fuel(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--fuel", type=int, default=None, help="配對化簡次數上限")


def create_parser() -> argparse.ArgumentParser:
    """建立命令列參數解析器"""
    parser = argparse.ArgumentParser(
        prog="gfree",
        description="gfree - 係數環上的 Gröbner 基與 generic freeness 工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
範例：
  # Gröbner 基
  gfree gb examples/ideal.txt

  # freeness witness（key = value 格式）
  gfree --machine witness examples/ideal.txt

  # fiber 比較
  gfree fibers examples/ideal.txt --points 3,5,7 --bound 4

  # 行列式實例
  gfree det --m 2 --n 3 --t 2 --ring ZZ --coeffs coeffs.yaml
        """,
    )
    parser.add_argument("--config", help="YAML 設定檔路徑")
    parser.add_argument("--machine", action="store_true", help="以 key = value 格式輸出報告")
    parser.add_argument("-v", "--verbose", action="store_true", help="顯示詳細日誌")

    subparsers = parser.add_subparsers(dest="command", help="可用指令")

    gb_p = subparsers.add_parser("gb", help="計算 Gröbner 基與初始項")
    _add_file(gb_p)
    _add_fuel(gb_p)
    gb_p.add_argument("--check", action="store_true",
                      help="只判定輸入的生成元是否已是 Gröbner 基，不做補全")

    initial_p = subparsers.add_parser("initial", help="已認證 Gröbner 基的初始模")
    _add_file(initial_p)
    _add_fuel(initial_p)

    witness_p = subparsers.add_parser("witness", help="freeness witness a")
    _add_file(witness_p)
    _add_fuel(witness_p)
    witness_p.add_argument("--refine", action="store_true", default=None,
                           help="依單項式整除關係先取 gcd 再取 lcm")

    reduce_p = subparsers.add_parser("reduce", help="對 Gröbner 基化簡並輸出商與餘式")
    _add_file(reduce_p)
    _add_fuel(reduce_p)
    reduce_p.add_argument("--target", required=True, help="要化簡的元素")

    stdmon_p = subparsers.add_parser("stdmon", help="標準單項式（generic Macaulay 基底）")
    _add_file(stdmon_p)
    _add_fuel(stdmon_p)
    _add_bound(stdmon_p)

    hilbert_p = subparsers.add_parser("hilbert", help="初始模的 Hilbert 表")
    _add_file(hilbert_p)
    _add_fuel(hilbert_p)
    _add_bound(hilbert_p)

    fibers_p = subparsers.add_parser("fibers", help="各特化點的 fiber Hilbert 比較")
    _add_file(fibers_p)
    _add_fuel(fibers_p)
    _add_bound(fibers_p)
    fibers_p.add_argument("--points", help="以逗號分隔的特化點（ℤ 為質數，k[t] 為純量）")
    fibers_p.add_argument("--workers", type=int, default=None, help="並行執行緒數")

    hom_p = subparsers.add_parser("homogenize", help="(ω,𝕕)-齊次化與退化檢查")
    _add_file(hom_p)
    _add_fuel(hom_p)
    _add_bound(hom_p)
    hom_p.add_argument("--check", action="store_true", help="執行 t=0 / t=1 退化檢查")
    hom_p.add_argument("--certify", action="store_true", default=None,
                       help="在加入 t 的權重細化序下重新認證")

    frob_p = subparsers.add_parser("frobcheck", help="Frobenius 冪與初始模的交換性（正特徵）")
    _add_file(frob_p)
    _add_fuel(frob_p)
    frob_p.add_argument("--e", type=int, required=True, help="q = p^e")

    sqfree_p = subparsers.add_parser("sqfree", help="square-free 退化報告")
    _add_file(sqfree_p)
    _add_fuel(sqfree_p)

    det_p = subparsers.add_parser("det", help="建立並驗證行列式實例")
    det_p.add_argument("--m", type=int, required=True, help="列數")
    det_p.add_argument("--n", type=int, required=True, help="行數")
    det_p.add_argument("--t", type=int, required=True, help="minor 階數")
    det_p.add_argument("--ring", default="QQ", help="係數環（預設 QQ）")
    det_p.add_argument("--coeffs", help="m×n 係數矩陣的 YAML/JSON 檔（省略則全為 1）")
    det_p.add_argument("--points", help="以逗號分隔的特化點")
    det_p.add_argument("--bound", type=int, default=3, help="Hilbert 表的最高次數（預設 3）")
    det_p.add_argument("--sharp", action="store_true", help="以較大的 ℋ 計算 witness（實驗性）")
    det_p.add_argument("--workers", type=int, default=None, help="並行執行緒數")
    _add_fuel(det_p)

    format_p = subparsers.add_parser("format", help="輸出正規化後的問題檔")
    _add_file(format_p)

    subparsers.add_parser("info", help="顯示工具版本和相關資訊")

    return parser


# ----------------------------------------------------------------- helpers


def load_config(args: argparse.Namespace) -> ConfigLoader:
    """
    載入設定並套用 CLI 覆寫

    Raises:
        ConfigError: 設定內容不符合 Schema
    """
    config = ConfigLoader(args.config)
    overrides = {
        "gb.fuel": getattr(args, "fuel", None),
        "freeness.refine_witness": getattr(args, "refine", None),
        "freeness.default_bound": getattr(args, "bound", None),
        "degeneration.certify_homogenized": getattr(args, "certify", None),
        "parallel.workers": getattr(args, "workers", None),
    }
    config.config = config.merge_with_args(overrides)
    is_valid, errors = config.validate()
    if not is_valid:
        raise ConfigError("設定檔驗證失敗：" + "；".join(errors))
    return config


def load_problem(path: str) -> ProblemFile:
    return ProblemParser().parse(path)


def _basis(problem: ProblemFile, config: ConfigLoader):
    return buchberger(problem.gens, module=problem.module,
                      fuel=config.get("gb.fuel"),
                      tail_reduce=config.get("gb.tail_reduce", True))


def _parse_points(domain, text: Optional[str]):
    if not text:
        return None
    return [parse_point(domain, item) for item in text.split(",") if item.strip()]


def _run(args: argparse.Namespace, compute: Callable[[ConfigLoader], Any]) -> int:
    """執行命令、輸出報告並依例外類別與檢查結果決定結束碼"""
    handler = ReportErrorHandler()
    try:
        config = load_config(args)
        if not args.verbose:
            setup_logging(False, config.get("logging.log_file") if config.get("logging.file_output") else None,
                          config.get("logging.level", "WARNING"))
        report = compute(config)
    except FuelExhaustedError as e:
        _error(f"fuel 用盡：{handler.handle(e, args.command)}")
        return EXIT_FUEL_EXHAUSTED
    except INPUT_ERRORS as e:
        _error(handler.handle(e, args.command))
        return EXIT_INPUT_ERROR
    except GroebnerError as e:
        _error(handler.handle(e, args.command))
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_CHECK_FAILED

    records = collect_records(report)
    handler.collect(records)
    if handler.has_errors():
        logger.info("未通過的檢查：%s", ", ".join(handler.failed_checks()))
    sys.stdout.write(render_report(records, "machine" if args.machine else "text"))
    return EXIT_CHECK_FAILED if handler.has_errors() else EXIT_OK


# ----------------------------------------------------------------- commands


def cmd_gb(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        if args.check:
            candidate = certify(problem.gens, problem.module)
            return [candidate, check_groebner(candidate)]
        G = _basis(problem, config)
        return [G, check_groebner(G)]
    return _run(args, compute)


def cmd_initial(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        terms = initial_module(G)
        rows = [("initial.size", str(len(terms)))]
        rows.extend((f"initial.{i}", str(FreeElem(G.module, [t]))) for i, t in enumerate(terms, 1))
        return rows
    return _run(args, compute)


def cmd_witness(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        return witness(G, refine=config.get("freeness.refine_witness", False))
    return _run(args, compute)


def cmd_reduce(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        target = parse_element(args.target, problem.module)
        trace = reduce(target, G, check=True)
        return [("reduce.target", str(target))] + trace.records()
    return _run(args, compute)


def cmd_stdmon(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        w = witness(G, refine=config.get("freeness.refine_witness", False))
        bound = config.get("freeness.default_bound")
        monomials = standard_monomials(G.initial_terms, w, bound, problem.effective_grading(),
                                       problem.rank, problem.order)
        rows = [("stdmon.bound", str(bound)), ("stdmon.witness", str(w.value)),
                ("stdmon.count", str(len(monomials)))]
        for i, (mono, basis) in enumerate(monomials, 1):
            text = format_monomial(mono, problem.variables) or "1"
            if problem.rank > 1:
                text = f"{text}*e{basis}"
            rows.append((f"stdmon.{i}", text))
        return rows
    return _run(args, compute)


def cmd_hilbert(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        w = witness(G, refine=config.get("freeness.refine_witness", False))
        bound = config.get("freeness.default_bound")
        return hilbert_function(G.initial_terms, problem.effective_grading(), (0, bound),
                                problem.rank, w)
    return _run(args, compute)


def cmd_fibers(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        grading = problem.effective_grading()
        nu_range = (0, config.get("freeness.default_bound"))
        fuel = config.get("gb.fuel")
        refine = config.get("freeness.refine_witness", False)
        generic, w = generic_table(problem.gens, problem.module, grading, nu_range, fuel, refine)
        points = (_parse_points(problem.domain, args.points)
                  or default_points(problem.domain, w, config.get("freeness.default_points")))
        return fiber_compare(problem.gens, points, nu_range, grading, problem.module,
                             generic=generic, witness=w, fuel=fuel,
                             workers=config.get("parallel.workers", 1))
    return _run(args, compute)


def cmd_homogenize(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        data = homogenize(G, certify=config.get("degeneration.certify_homogenized", False),
                          search_box=config.get("degeneration.search_box"))
        if not args.check:
            return data
        return degeneration_check(data, config.get("freeness.default_bound"),
                                  fuel=config.get("gb.fuel"))
    return _run(args, compute)


def cmd_frobcheck(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        return frobenius_initial_check(G, args.e, fuel=config.get("gb.fuel"))
    return _run(args, compute)


def cmd_sqfree(args: argparse.Namespace) -> int:
    def compute(config):
        problem = load_problem(args.file)
        G = _basis(problem, config)
        return squarefree_report(G, problem.effective_grading())
    return _run(args, compute)


def load_coeffs(path: str, domain) -> List[List[Any]]:
    """
    讀取係數矩陣（YAML 或 JSON）並轉成係數環元素

    Raises:
        DeterminantalError: 內容不符合係數矩陣的 Schema
    """
    data = yaml.safe_load(FileUtils.read_text(path))
    is_valid, errors = SchemaValidator.builtin("coeffs").validate(data)
    if not is_valid:
        raise DeterminantalError("係數矩陣格式錯誤：" + "；".join(errors))
    return [[parse_coefficient(str(value), domain) for value in row] for row in data]


def cmd_det(args: argparse.Namespace) -> int:
    def compute(config):
        domain = parse_domain(args.ring)
        coeffs = load_coeffs(args.coeffs, domain) if args.coeffs else None
        workers = config.get("parallel.workers", 1)
        inst, gens = build_instance(args.m, args.n, args.t, domain, coeffs, workers=workers)
        return verify_instance(inst, gens, args.bound, _parse_points(domain, args.points),
                               fuel=config.get("gb.fuel"), workers=workers, sharp=args.sharp,
                               how_many=config.get("freeness.default_points"))
    return _run(args, compute)


def cmd_format(args: argparse.Namespace) -> int:
    try:
        problem = load_problem(args.file)
    except INPUT_ERRORS as e:
        _error(str(e))
        return EXIT_INPUT_ERROR
    sys.stdout.write(format_problem(problem))
    return EXIT_OK


def cmd_info() -> int:
    print(f"""
╔══════════════════════════════════════════════════╗
║     gfree                                        ║
║     係數環上的 Gröbner 基與 generic freeness     ║
╠══════════════════════════════════════════════════╣
║  版本: {__version__:<42}║
║  授權: MIT                                       ║
╚══════════════════════════════════════════════════╝

功能：
  • ℤ、ℚ、𝔽_p、𝔽_p[t]、ℚ[t] 係數的自由模 Gröbner 基
  • freeness witness、標準單項式與 Hilbert 表
  • fiber 比較、平坦退化、Frobenius 冪檢查
  • square-free 退化報告與行列式實例驗證

依賴套件：
  • sympy >= 1.13
  • Jinja2 >= 3.1.2
  • PyYAML >= 6.0
  • jsonschema >= 4.17.0

詳細說明請參閱: doc/README.md
    """)
    return EXIT_OK


COMMANDS = {
    "gb": cmd_gb,
    "initial": cmd_initial,
    "witness": cmd_witness,
    "reduce": cmd_reduce,
    "stdmon": cmd_stdmon,
    "hilbert": cmd_hilbert,
    "fibers": cmd_fibers,
    "homogenize": cmd_homogenize,
    "frobcheck": cmd_frobcheck,
    "sqfree": cmd_sqfree,
    "det": cmd_det,
    "format": cmd_format,
}


def cli(args: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        parsed_args = parser.parse_args(args)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK

    if parsed_args.command is None:
        parser.print_help()
        return EXIT_OK
    if parsed_args.verbose:
        setup_logging(verbose=True)
    if parsed_args.command == "info":
        return cmd_info()
    return COMMANDS[parsed_args.command](parsed_args)


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
