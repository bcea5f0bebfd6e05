# 📌 명령줄 인터페이스 (typer)
# ack / nf / bc / goodstein / ordinal {psi,chi,fund,cmp,descent,reach} / verify
# 종료 코드: 0 성공, 1 검증 실패, 2 사용법 오류
# 결과는 stdout, 로그는 stderr

import json
import logging
from enum import Enum
from typing import List, Optional

import typer

from ackermann.ackmath import ack_eval
from ackermann.base_change import base_change
from ackermann.normal_form import Mode, render, to_dict, to_tree
from config import Config, parse_bound
from goodstein.goodstein import GoodsteinTrace, Variant, run
from ordinals.notation import OrdinalParseError, parse, to_text
from ordinals.ordinal import Ordinal, cmp, descent, fund, step_down_reachable
from ordinals.ordinal_map import chi, psi
from verification.lemma_suite import LemmaSuite
from verification.ordinal_suite import OrdinalSuite
from verification.report import SuiteReport, blocking_failures, summary_frame

logger = logging.getLogger(__name__)

app = typer.Typer(help="Ackermann 정규형 · 밑 변환 · Goodstein 과정 · φ₂(0) 아래 서수", add_completion=False)
ordinal_app = typer.Typer(help="서수 표기 질의 (psi, chi, fund, cmp, descent, reach)")
app.add_typer(ordinal_app, name="ordinal")

BOUND_OPTION = typer.Option(None, "--bound", help="컷오프 상한 (예: 1e500). 기본값 GOODSTEIN_DEFAULT_BOUND")
JSON_OPTION = typer.Option(False, "--json", help="JSON 출력")
MODE_OPTION = typer.Option(Mode.UNNESTED, "--mode", help="정규형 모드")


class SuiteName(str, Enum):
    LEMMAS = "lemmas"
    ORDINALS = "ordinals"
    ALL = "all"


@app.callback()
def main() -> None:
    pass


def _nat(text: str, name: str) -> int:
    try:
        return parse_bound(text)
    except ValueError as e:
        raise typer.BadParameter(f"{name}: {e}") from None


def _bound(text: Optional[str]) -> int:
    return Config.default_bound() if text is None else _nat(text, "--bound")


def _ordinal(text: str) -> Ordinal:
    try:
        return parse(text)
    except OrdinalParseError as e:
        raise typer.BadParameter(str(e)) from None


def _echo_json(payload) -> None:
    typer.echo(json.dumps(payload, ensure_ascii=False))


def _shorten(text: str, width: int) -> str:
    if width <= 0 or len(text) <= width:
        return text
    return text[: width - 1] + "…"


## 🟢 수 ##

@app.command("ack")
def cmd_ack(a: str, k: str, b: str, bound: Optional[str] = BOUND_OPTION):
    """ A_a(k,b) 계산 (상한 초과 시 exceeds-bound) """
    try:
        value = ack_eval(_nat(a, "a"), _nat(k, "k"), _nat(b, "b"), _bound(bound))
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None
    typer.echo(str(value))


@app.command("nf")
def cmd_nf(c: str, k: str, mode: Mode = MODE_OPTION, as_json: bool = JSON_OPTION):
    """ c 의 k-정규형 """
    c_value, k_value = _nat(c, "c"), _nat(k, "k")
    try:
        tree = to_tree(c_value, k_value, mode)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None
    if as_json:
        _echo_json({"c": str(c_value), "k": k_value, "mode": mode.value,
                    "normal_form": render(tree), "tree": to_dict(tree)})
    else:
        typer.echo(render(tree))


@app.command("bc")
def cmd_bc(c: str, k: str, mode: Mode = MODE_OPTION, bound: Optional[str] = BOUND_OPTION):
    """ 밑 변환 c[k ← k+1] """
    try:
        value = base_change(_nat(c, "c"), _nat(k, "k"), _bound(bound), mode)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None
    typer.echo(str(value))


## 🟠 Goodstein ##

def _print_trace(trace: GoodsteinTrace, width: int) -> None:
    reason = trace.truncated_reason.value if trace.truncated_reason else "-"
    typer.echo(f"variant={trace.variant.value} start={trace.start} "
               f"terminated={str(trace.terminated).lower()} truncated_reason={reason}")
    frame = trace.to_frame()
    for column in ("value", "normal_form", "ordinal"):
        frame[column] = frame[column].map(lambda x: "-" if x is None else _shorten(str(x), width))
    typer.echo(frame.to_string(index=False))


@app.command("goodstein")
def cmd_goodstein(
    ell: str,
    variant: Variant = typer.Option(Variant.UNNESTED, "--variant", help="classic / unnested / nested"),
    max_steps: Optional[int] = typer.Option(None, "--max-steps", help="최대 전이 횟수 (기본 GOODSTEIN_MAX_STEPS)"),
    bound: Optional[str] = BOUND_OPTION,
    ordinals: bool = typer.Option(False, "--ordinals", help="각 단계에 ψ/χ 서수 표시"),
    as_json: bool = JSON_OPTION,
    width: Optional[int] = typer.Option(None, "--width", help="텍스트 열 너비 (0 이면 자르지 않음)"),
):
    """ Goodstein 과정 실행 """
    try:
        trace = run(variant, _nat(ell, "ell"), max_steps, _bound(bound), with_ordinals=ordinals)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None
    if as_json:
        _echo_json(trace.to_dict())
    else:
        _print_trace(trace, Config.TEXT_WIDTH if width is None else width)


## 🟠 서수 ##

@ordinal_app.command("psi")
def cmd_psi(k: str, c: str):
    """ ψ_k(c) """
    try:
        typer.echo(to_text(psi(_nat(k, "k"), _nat(c, "c"))))
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None


@ordinal_app.command("chi")
def cmd_chi(k: str, c: str):
    """ χ_k(c) """
    try:
        typer.echo(to_text(chi(_nat(k, "k"), _nat(c, "c"))))
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None


@ordinal_app.command("fund")
def cmd_fund(alpha: str, k: str):
    """ 기본열 α[k] """
    typer.echo(to_text(fund(_ordinal(alpha), _nat(k, "k"))))


@ordinal_app.command("cmp")
def cmd_cmp(alpha: str, beta: str):
    """ 비교 결과 LT / EQ / GT """
    typer.echo(str(cmp(_ordinal(alpha), _ordinal(beta))))


@ordinal_app.command("descent")
def cmd_descent(alpha: str, max_steps: int = typer.Option(10, "--max-steps"), as_json: bool = JSON_OPTION):
    """ α, α[1], α[1][2], ... """
    sequence = [to_text(x) for x in descent(_ordinal(alpha), max_steps)]
    if as_json:
        _echo_json(sequence)
    else:
        typer.echo("\n".join(sequence))


@ordinal_app.command("reach")
def cmd_reach(alpha: str, beta: str, k: str, max_steps: int = typer.Option(1000, "--max-steps")):
    """ β 가 α 에서 ·[k] 로 도달 가능한지 (Yes / No / Unknown) """
    typer.echo(step_down_reachable(_ordinal(alpha), _ordinal(beta), _nat(k, "k"), max_steps).value)


## 🔴 검증 ##

def _print_reports(reports: List[SuiteReport]) -> None:
    typer.echo(summary_frame(reports).to_string(index=False))
    for report in reports:
        for failure in report.failures[:10]:
            label = "NOTE" if report.advisory else "FAIL"
            typer.echo(f"{label} {report.suite}: {failure.input} expected {failure.expected}, got {failure.got}")
        if len(report.failures) > 10:
            typer.echo(f"... {report.suite}: {len(report.failures) - 10} more")


@app.command("verify")
def cmd_verify(
    suite: SuiteName = typer.Option(SuiteName.ALL, "--suite"),
    bound: Optional[str] = typer.Option(None, "--bound", help="전수 조사 상한 c (기본: 검사별 기본값)"),
    k_max: Optional[int] = typer.Option(None, "--k-max", help="밑 범위 2..K"),
    seed: Optional[int] = typer.Option(None, "--seed", help="표본 시드 (기본 GOODSTEIN_VERIFY_SEED)"),
    samples: Optional[int] = typer.Option(None, "--samples", help="서수 표본 수"),
    workers: Optional[int] = typer.Option(None, "--workers", help="병렬 프로세스 수"),
    as_json: bool = JSON_OPTION,
):
    """ 보조정리 · 서수 성질 검증 (실패 시 종료 코드 1) """
    limit = None if bound is None else _nat(bound, "--bound")
    if limit is not None and limit < 1:
        raise typer.BadParameter(f"--bound must be >= 1, got {limit}")
    try:
        lemma_suite = LemmaSuite(limit=limit, k_max=k_max, workers=workers) \
            if suite in (SuiteName.LEMMAS, SuiteName.ALL) else None
        ordinal_suite = OrdinalSuite(seed=seed, samples=samples) \
            if suite in (SuiteName.ORDINALS, SuiteName.ALL) else None
    except ValueError as e:
        raise typer.BadParameter(str(e)) from None

    reports = []
    if lemma_suite is not None:
        reports += lemma_suite.run_all()
    if ordinal_suite is not None:
        reports += ordinal_suite.run_all()

    if as_json:
        _echo_json([r.to_dict() for r in reports])
    else:
        _print_reports(reports)
    failed = blocking_failures(reports)
    if failed:
        logger.warning(f"🚨 검증 실패: {len(failed)} 개 스위트")
        raise typer.Exit(code=1)
