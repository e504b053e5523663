"""
Command-line interface.

Exit codes: 0 success, 1 an axiom or theorem failed, 2 bad input,
3 a campaign found no witnesses.
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click

from comodules import (
    ComoduleError,
    ComodulePackage,
    ComoduleRule,
    check_comodule,
    comodule_axiom_residual,
    comodule_derive,
)
from constructions import ConstructionError, ConstructionRule, get_registry, parse_endomorphism
from search import (
    AlphaConstraint,
    SearchConfig,
    SearchError,
    SearchMode,
    WitnessRecord,
    enumerate_instances,
    full_report,
    minimize_witness,
    sweedler_oracle_check,
)
from structures import (
    EpsilonReading,
    StructureError,
    StructureKind,
    StructurePackage,
    TridendriformAlgebra,
    axiom_residual,
    check_algebra,
    check_structure,
    codualize,
    dualize_algebra,
)
from tensorcore import TensorCoreError

from .campaign import verify_all, verify_theorem
from .config import PROFILES, create_config_for_profile, print_config_help
from .errors import NoWitnessesFound, StructureFileError, UnknownTheorem
from .file_format import emit_structure_file, load_structure_file, write_structure_file
from .reports import emit_report, format_check_report, summary_table, write_counterexamples, write_ledger
from .theorems import THEOREMS, theorem_ids

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_NO_WITNESSES = 3

INPUT_ERRORS = (StructureFileError, StructureError, ConstructionError, ComoduleError,
                TensorCoreError, SearchError, UnknownTheorem, OSError)

_EPSILON = click.Choice([e.value for e in EpsilonReading])


def handle_errors(command):
    """Map library exceptions onto exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except NoWitnessesFound as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_NO_WITNESSES)
        except INPUT_ERRORS as e:
            logger.debug("Input error", exc_info=True)
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_INPUT)
    return wrapper


def _output(package, out: Optional[str]) -> None:
    if out:
        path = write_structure_file(package, out)
        click.echo(f"wrote {path}", err=True)
    else:
        click.echo(emit_structure_file(package), nl=False)


def _params(pairs: Tuple[str, ...]) -> Dict[str, str]:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"expected key=value, got {pair!r}", param_hint="--param")
        params[key.strip()] = value.strip()
    return params


@click.group()
@click.option("--debug", is_flag=True, help="Log at DEBUG level")
@click.option("--profile", type=click.Choice(PROFILES), default="development", show_default=True,
              help="Engine configuration preset")
@click.pass_context
def cli(ctx, debug: bool, profile: str):
    """Exact checks and constructions for Hom-coalgebraic structures."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    ctx.obj = create_config_for_profile(profile)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--axioms", default=None, help="Comma-separated axiom ids (default: all)")
@click.option("--epsilon", type=_EPSILON, default=None, help="Reading of ε in post-Hom-Poisson identities")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
@click.pass_obj
@handle_errors
def check(engine, file: str, axioms: Optional[str], epsilon: Optional[str], as_json: bool):
    """Check every axiom of the package in FILE."""
    package = load_structure_file(file)
    selected = [a.strip() for a in axioms.split(",")] if axioms else None
    if isinstance(package, TridendriformAlgebra):
        report = check_algebra(package)
    elif isinstance(package, ComodulePackage):
        report = check_comodule(package, selected)
    else:
        report = check_structure(package, selected, EpsilonReading(epsilon or engine.epsilon_reading))
    if as_json:
        click.echo(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        click.echo(format_check_report(report, Path(file).name), nl=False)
    sys.exit(EXIT_OK if report.passed else EXIT_FAILED)


def _comodule_params(subject: ComodulePackage, raw: Dict[str, str]) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for key, value in raw.items():
        if key in ("n", "k"):
            try:
                params[key] = int(value)
            except ValueError:
                raise click.BadParameter(f"{key} must be an integer", param_hint="--param")
        elif key == "beta":
            params[key] = parse_endomorphism(value, subject.base.space, subject.field)
        elif key == "beta_m":
            params[key] = parse_endomorphism(value, subject.mspace, subject.field)
        else:
            params[key] = value
    return params


@cli.command()
@click.argument("rule")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--aux", type=click.Path(exists=True, dir_okay=False), help="Second package for binary rules")
@click.option("--param", "params", multiple=True, help="Rule parameter as key=value (repeatable)")
@click.option("-o", "--out", default=None, help="Output file (default: stdout)")
@handle_errors
def construct(rule: str, file: str, aux: Optional[str], params: Tuple[str, ...], out: Optional[str]):
    """Apply construction RULE to the package in FILE."""
    subject = load_structure_file(file)
    second = load_structure_file(aux) if aux else None
    raw = _params(params)
    if rule in {r.value for r in ComoduleRule}:
        if isinstance(subject, ComodulePackage):
            raw = _comodule_params(subject, raw)
        result = comodule_derive(subject, rule, raw, second)
    else:
        if not isinstance(subject, StructurePackage):
            raise click.BadParameter(f"{rule} needs a structure package", param_hint="FILE")
        result = get_registry().apply(ConstructionRule(rule, raw), subject, second)

    if isinstance(result, (StructurePackage, ComodulePackage)):
        _output(result, out)
        report = full_report(result)
        click.echo(f"{result.kind.value}: required axioms {'pass' if report.passed else 'FAIL'}", err=True)
    else:
        click.echo(json.dumps(result.to_dict(), indent=2, sort_keys=True))


@cli.command()
@click.argument("kind")
@click.option("--dim", type=int, default=None, help="Dimension of the coalgebra")
@click.option("--field", default=None, help="Q, Fp <p> or F<p>")
@click.option("--mode", type=click.Choice([m.value for m in SearchMode]), default=SearchMode.RANDOM.value,
              show_default=True)
@click.option("--alpha", type=click.Choice([a.value for a in AlphaConstraint]),
              default=AlphaConstraint.IDENTITY.value, show_default=True, help="Constraint on the twist map")
@click.option("--budget", type=int, default=None, help="Candidates to visit")
@click.option("--seed", type=int, default=None)
@click.option("--density", type=float, default=None, help="Share of nonzero random coefficients")
@click.option("--rb-weight", default="1", show_default=True, help="Weight of Rota-Baxter operators")
@click.option("--max-witnesses", type=int, default=None)
@click.option("--include-trivial", is_flag=True, help="Keep all-zero packages")
@click.option("--multiplicative", is_flag=True, help="Keep only multiplicative packages")
@click.option("--out", default=None, help="Directory for witness files")
@click.pass_obj
@handle_errors
def search(engine, kind: str, dim: Optional[int], field: Optional[str], mode: str, alpha: str,
           budget: Optional[int], seed: Optional[int], density: Optional[float], rb_weight: str,
           max_witnesses: Optional[int], include_trivial: bool, multiplicative: bool, out: Optional[str]):
    """Enumerate packages of KIND that pass every required axiom."""
    exhaustive = mode == SearchMode.EXHAUSTIVE.value
    try:
        cfg = SearchConfig(
            kind=kind,
            dim=dim or engine.default_dim,
            field=field or engine.default_field,
            mode=mode,
            alpha=alpha,
            budget=budget or (engine.exhaustive_budget if exhaustive else engine.search_budget),
            seed=engine.default_seed if seed is None else seed,
            density=density or (1.0 if exhaustive else engine.search_density),
            rb_weight=rb_weight,
            max_witnesses=max_witnesses,
            include_trivial=include_trivial,
            require_multiplicative=multiplicative,
            epsilon=engine.epsilon_reading,
        )
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_INPUT)

    result = enumerate_instances(cfg)
    for record in result:
        if out:
            write_structure_file(record.package, Path(out) / f"{record.name}.hcs")
        else:
            click.echo(f"{record.name}  nonzero={record.package.nonzero_count()}  "
                       f"multiplicative={'yes' if record.verdicts.multiplicative else 'no'}")
    total = "?" if result.total is None else str(result.total)
    click.echo(f"{len(result)} witnesses from {result.visited}/{total} candidates"
               f"{' (budget exhausted)' if result.budget_exceeded else ''}", err=True)


@cli.command("verify-theorem")
@click.argument("theorem_id")
@click.option("--trials", type=int, default=None)
@click.option("--dim", type=int, default=None)
@click.option("--field", default=None)
@click.option("--seed", type=int, default=None)
@click.option("--epsilon", type=_EPSILON, default=None)
@click.option("--out", default=None, help="Directory for counterexamples and the ledger")
@click.option("--runtime", is_flag=True, help="Include runtimes in the report")
@click.pass_obj
@handle_errors
def verify_theorem_command(engine, theorem_id: str, trials: Optional[int], dim: Optional[int],
                           field: Optional[str], seed: Optional[int], epsilon: Optional[str],
                           out: Optional[str], runtime: bool):
    """Run the campaign for THEOREM_ID (or 'all')."""
    out_dir = Path(out) if out else engine.output_dir
    if theorem_id == "all":
        reports, skipped = verify_all(theorem_ids(), trials, field, dim, seed, engine)
    else:
        reports = [verify_theorem(theorem_id, trials, field, dim, seed, engine,
                                  EpsilonReading(epsilon) if epsilon else None)]
        skipped = {}

    for report in reports:
        click.echo(emit_report(report, include_runtime=runtime))
        for path in write_counterexamples(out_dir / "counterexamples", report):
            click.echo(f"wrote {path}", err=True)
    if len(reports) > 1:
        click.echo(summary_table(reports), nl=False)
    for skipped_id, reason in sorted(skipped.items()):
        click.echo(f"skipped {skipped_id}: {reason}", err=True)
    if any(r.ledger for r in reports):
        write_ledger(out_dir, reports)

    if any(r.refuted for r in reports):
        sys.exit(EXIT_FAILED)
    if skipped:
        sys.exit(EXIT_NO_WITNESSES)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", default=None, help="Output file (default: stdout)")
@handle_errors
def dualize(file: str, out: Optional[str]):
    """Swap between a tridendriform algebra and its dual coalgebra."""
    package = load_structure_file(file)
    if isinstance(package, TridendriformAlgebra):
        _output(dualize_algebra(package), out)
    elif isinstance(package, StructurePackage) and package.kind is StructureKind.HOM_TRIDENDRIFORM:
        _output(codualize(package), out)
    else:
        raise click.BadParameter("dualize needs a TridendAlgebra or HomTridendriform file", param_hint="FILE")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--axiom", "axiom_id", required=True, help="Axiom id")
@click.option("--epsilon", type=_EPSILON, default=None)
@click.pass_obj
@handle_errors
def oracle(engine, file: str, axiom_id: str, epsilon: Optional[str]):
    """Evaluate one axiom componentwise and compare with the checker."""
    package = load_structure_file(file)
    reading = EpsilonReading(epsilon or engine.epsilon_reading)
    result = sweedler_oracle_check(package, axiom_id, reading)
    if isinstance(package, ComodulePackage):
        residual = comodule_axiom_residual(package, axiom_id)
    else:
        residual = axiom_residual(package, axiom_id, reading)
    agree = residual == result.residual
    click.echo(f"{axiom_id}: oracle {'pass' if result.passed else 'FAIL'} "
               f"({result.summands_evaluated} summands), checker {'pass' if residual.is_zero() else 'FAIL'}")
    if not agree:
        click.echo("oracle and checker residuals DISAGREE", err=True)
    sys.exit(EXIT_OK if agree and result.passed else EXIT_FAILED)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--axiom", "axiom_id", default=None, help="Keep this axiom failing while shrinking")
@click.option("--include-alpha", is_flag=True, help="Also zero twist map coefficients")
@click.option("-o", "--out", default=None)
@handle_errors
def minimize(file: str, axiom_id: Optional[str], include_alpha: bool, out: Optional[str]):
    """Shrink the package in FILE while its verdict (or a failing axiom) is kept."""
    package = load_structure_file(file)
    if not isinstance(package, (StructurePackage, ComodulePackage)):
        raise click.BadParameter("minimize needs a structure or comodule package", param_hint="FILE")
    record = WitnessRecord(package, 0, 0, full_report(package))
    predicate = None
    if axiom_id:
        def predicate(candidate) -> bool:
            if isinstance(candidate, ComodulePackage):
                return not comodule_axiom_residual(candidate, axiom_id).is_zero()
            return not axiom_residual(candidate, axiom_id).is_zero()

    reduced = minimize_witness(record, predicate, include_alpha)
    click.echo(f"nonzero coefficients {package.nonzero_count()} -> {reduced.package.nonzero_count()}", err=True)
    _output(reduced.package, out)


@cli.command()
def theorems():
    """List the theorem registry."""
    for theorem in THEOREMS:
        flag = " [report-only]" if theorem.report_only else ""
        click.echo(f"{theorem.id:<18} {theorem.hypothesis_label} -> {theorem.conclusion.value}{flag}")
        click.echo(f"{'':<18} {theorem.statement}")


@cli.command()
def rules():
    """List construction rules."""
    for name, info in get_registry().list_rules().items():
        click.echo(f"{name:<26} {info['category']:<13} {info['description']}")
    for rule in ComoduleRule:
        click.echo(f"{rule.value:<26} {'comodule':<13} comodule construction")


@cli.command()
def config():
    """Describe the engine configuration fields and profiles."""
    print_config_help()


def main():
    cli()


if __name__ == "__main__":
    main()
