"""
Interface de linha de comando do motor de caminhos computacionais
"""

import functools
import sys
from typing import List, Optional

import click

from config.logging_config import get_logger
from config.settings import get_settings
from lambdas.reduction import parse_sites, path_along_sites, path_to_normal_form
from lambdas.terms import format_lambda, parse_lambda
from models.errors import USAGE_ERROR, PathEngineError
from models.schemas import LambdaPathResult
from paths.syntax import parse_path
from paths.terms import Axiom, leaves
from rewriting.engine import RewriteTrace, normalize, rw_equal, trace_document
from rewriting.rules import rule_table, rules_doc
from surfaces.groups import check_group_axioms, format_element, read_canonical
from surfaces.presentations import EXTENSION_RULES, presentation, surface_ruleset
from surfaces.words import parse_word, word_to_path

logger = get_logger("cli.commands")

EXAMPLES = """
Examples:
  paths normalize "sigma(sigma(t[x,y]))"
  paths equal "sigma(sigma(t))" "t"
  paths pi1 --surface torus --word "b a b^-1 a^-1"
  paths lambda-path --term "(\\x.(\\y.y x) (\\w.z w)) v"
  paths rules --show tt
"""


def _diagnostic(name: str, message: str) -> None:
    click.echo(f"error: {name}: {message}", err=True)


def handles_errors(command):
    """Converte PathEngineError em diagnóstico de uma linha e código de saída"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except PathEngineError as e:
            logger.error(f"❌ {type(e).__name__}: {e.message}")
            _diagnostic(type(e).__name__, e.message)
            click.get_current_context().exit(e.exit_status)

    return wrapper


def _emit_trace(start, normal_form, trace: RewriteTrace, show_trace: bool, as_json: bool, as_jsonl: bool) -> bool:
    """Escreve a trilha no formato pedido; True se a saída já foi inteiramente produzida"""
    if as_json:
        click.echo(trace_document(start, normal_form, trace).model_dump_json())
        return True
    if as_jsonl:
        for record in trace.to_records():
            click.echo(record.model_dump_json())
        return True
    if show_trace:
        for line in trace.format_lines():
            click.echo(line)
    return False


def _check_exclusive(as_json: bool, as_jsonl: bool) -> None:
    if as_json and as_jsonl:
        raise click.UsageError("--json e --jsonl são mutuamente exclusivos")


@click.group(epilog=EXAMPLES)
def main() -> None:
    """Reescrita de caminhos computacionais: LND_EQ-TRS, λ-caminhos e grupos fundamentais."""
    pass


@main.command("normalize")
@click.argument("term")
@click.option("--trace", "show_trace", is_flag=True, help="Uma linha por passo de reescrita")
@click.option("--json", "as_json", is_flag=True, help="Trilha como documento JSON único")
@click.option("--jsonl", "as_jsonl", is_flag=True, help="Trilha como um registro JSON por linha")
@handles_errors
def normalize_command(term: str, show_trace: bool, as_json: bool, as_jsonl: bool) -> None:
    """Normaliza TERM e imprime a forma normal."""
    _check_exclusive(as_json, as_jsonl)
    start = parse_path(term)
    normal_form, trace = normalize(start)
    if not _emit_trace(start, normal_form, trace, show_trace, as_json, as_jsonl):
        click.echo(str(normal_form))


@main.command("equal")
@click.argument("term1")
@click.argument("term2")
@handles_errors
def equal_command(term1: str, term2: str) -> None:
    """Decide se TERM1 e TERM2 são rw-iguais."""
    click.echo("equal" if rw_equal(parse_path(term1), parse_path(term2)) else "not-equal")


@main.command("pi1")
@click.option("--surface", required=True, help="circle, cylinder, moebius, torus ou proj_plane")
@click.option("--word", required=True, help='Palavra de laços, ex.: "b a b^-1 a^-1"')
@click.option("--trace", "show_trace", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--jsonl", "as_jsonl", is_flag=True)
@handles_errors
def pi1_command(surface: str, word: str, show_trace: bool, as_json: bool, as_jsonl: bool) -> None:
    """Calcula o elemento canônico de Π₁ representado pela palavra."""
    _check_exclusive(as_json, as_jsonl)
    presented = presentation(surface)
    start = word_to_path(presented, parse_word(word))
    normal_form, trace = normalize(start, rules=surface_ruleset(presented.name))
    element = read_canonical(presented, normal_form)
    if not _emit_trace(start, normal_form, trace, show_trace, as_json, as_jsonl):
        click.echo(format_element(element))


@main.command("lambda-path")
@click.option("--term", required=True, help="Termo λ, ex.: \"(\\x.x) y\"")
@click.option(
    "--strategy",
    type=click.Choice(["leftmost_outermost", "leftmost_innermost"]),
    default="leftmost_outermost",
    show_default=True,
)
@click.option("--fuel", type=click.IntRange(min=1), default=None, help="Máximo de contrações")
@click.option("--sites", default=None, help='Sítios explícitos, ex.: "0.0.1:eta,:beta,:beta"')
@click.option("--json", "as_json", is_flag=True)
@handles_errors
def lambda_path_command(term: str, strategy: str, fuel: Optional[int], sites: Optional[str], as_json: bool) -> None:
    """Reduz o termo e imprime a forma normal (linha 1) e o caminho (linha 2).

    Para o termo "(\\x.(\\y.y x) (\\w.z w)) v", o padrão (leftmost_outermost)
    contrai primeiro o β da raiz e imprime um caminho β,β,β. O caminho η,β,β
    com o β da raiz em seguida sai com --sites "0.0.1:eta,:beta,:beta". Todos
    chegam a "z v".
    """
    start = parse_lambda(term)
    if sites is not None:
        chosen = parse_sites(sites)
        normal_form, path = path_along_sites(start, chosen)
        steps = len(chosen)
    else:
        normal_form, path = path_to_normal_form(start, strategy, fuel or get_settings().lambda_fuel)
        steps = sum(1 for leaf in leaves(path) if isinstance(leaf, Axiom))

    if as_json:
        result = LambdaPathResult(normal_form=format_lambda(normal_form), path=str(path), steps=steps)
        click.echo(result.model_dump_json())
        return
    click.echo(format_lambda(normal_form))
    click.echo(str(path))


@main.command("rules")
@click.option("--list", "list_all", is_flag=True, help="Lista todas as regras")
@click.option("--show", "label", default=None, help="Mostra a regra com este rótulo")
@handles_errors
def rules_command(list_all: bool, label: Optional[str]) -> None:
    """Documentação das regras de reescrita."""
    if list_all == (label is not None):
        raise click.UsageError("use exatamente uma de --list ou --show LABEL")
    if label is not None:
        click.echo(rules_doc(label, EXTENSION_RULES))
        return
    for rule in (*rule_table(), *EXTENSION_RULES):
        click.echo(f"{rule.label}\t{rule.describe()}")


@main.command("check-groups")
@click.option("--surface", required=True)
@click.option("--samples", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=None, help="Semente (padrão: PATHS_FUZZ_SEED)")
@handles_errors
def check_groups_command(surface: str, samples: int, seed: Optional[int]) -> None:
    """Verifica as leis de grupo de Π₁ em amostras aleatórias."""
    seed = seed if seed is not None else get_settings().fuzz_seed
    report = check_group_axioms(surface, samples, seed)
    for check in report.checks:
        status = "pass" if check.passed else "fail"
        click.echo(f"{check.axiom}: {status} (checked {check.checked})")
        for counterexample in check.counterexamples:
            click.echo(f"  {counterexample}")
    if not report.passed:
        click.get_current_context().exit(1)


def run(argv: Optional[List[str]] = None) -> int:
    """Executa a CLI e devolve o código de saída; erros de uso viram uma única linha em stderr"""
    try:
        result = main.main(args=argv, prog_name="paths", standalone_mode=False)
    except click.ClickException as e:
        _diagnostic(type(e).__name__, e.format_message())
        return USAGE_ERROR
    except click.Abort:
        _diagnostic("Abort", "interrompido")
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
