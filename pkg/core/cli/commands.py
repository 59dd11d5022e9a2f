"""
Línea de comandos
=================

Subcomandos:

- run: ejecuta el test privado sobre un CSV (parámetros fijos u optimizados)
- power: tablas de potencia analítica sobre una rejilla, o la tabla de
  multiplicadores de tamaño muestral
- optimize: elige (m, α₀) para uno o varios n (curvas de potencia)
- simulate: estimación Monte-Carlo de tasas de rechazo o de uniformidad

Cada comando es determinista dado su conjunto completo de opciones, semilla
incluida. Cualquier error se registra, se informa por stderr y termina con
estado distinto de cero.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import argparse
import logging
import math
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import pandas as pd

from ..configuration import (
    ConfigValidator,
    configure_logging,
    get_config_manager,
    load_optimizer_settings,
    load_power_settings,
    load_simulation_settings,
    load_system_settings,
)
from ..exceptions import BaseTotException
from ..power import (
    CanonneQuery,
    OptimizerResult,
    PowerQuery,
    canonne_type1_lower_bound,
    optimize_known_effect,
    optimize_target_power,
    pb_power,
    power_at,
    randomized_response_keep_probability,
    sample_size_multipliers,
    tot_power,
)
from ..public_tests import (
    AnovaEffect,
    EffectSpec,
    MeanVectorEffect,
    PublicTest,
    ScalarEffect,
    available_families,
    create_test,
    geometric_effect_grid,
)
from ..simulation import GeneratorSpec, SimPlan, estimate_pvalue_uniformity, estimate_rejection_rate
from ..tot_engine import ToTConfig, run_tot
from .exceptions import InputFormatError
from .io import parse_grid, read_dataset, write_json, write_table

logger = logging.getLogger("tot.cli")

POWER_COLUMNS = [
    "n", "epsilon", "alpha", "m", "alpha0", "theta",
    "tot_power", "pb_power", "canonne_bound", "public_power",
]
GRID_KEYS = ["n", "epsilon", "alpha", "m", "alpha0", "theta", "effect", "d", "delta", "gamma", "pb_p"]

# (θ, α₀, ρ, α) de la tabla de multiplicadores
MULTIPLIER_ROWS = [(0.80, 0.05, 0.80, 0.05), (0.95, 0.05, 0.95, 0.05)]


@dataclass(frozen=True)
class RunRequest:
    """
    Petición de `run`: parámetros fijos (m, α₀) o directivas de
    optimización (ρ y límites del efecto), nunca ambos.
    """

    input: str
    test: str
    epsilon: float
    alpha: float
    seed: int
    m: Optional[int] = None
    alpha0: Optional[float] = None
    target_power: Optional[float] = None
    effect_min: Optional[float] = None
    effect_max: Optional[float] = None
    output: Optional[str] = None

    def __post_init__(self):
        fixed = self.m is not None and self.alpha0 is not None
        partial_fixed = (self.m is None) != (self.alpha0 is None)
        optimize = self.target_power is not None
        if partial_fixed:
            raise InputFormatError("--m y --alpha0 deben indicarse juntos")
        if fixed == optimize:
            raise InputFormatError("Indique --m/--alpha0 o --optimize, exactamente uno de ellos")
        if optimize and (self.effect_min is None or self.effect_max is None):
            raise InputFormatError("--optimize requiere --effect-min y --effect-max")


def _float_list(raw: str) -> List[float]:
    try:
        return [float(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise InputFormatError(f"Lista numérica inválida: {raw!r}") from None


def _int_list(raw: str) -> List[int]:
    return [int(v) for v in _float_list(raw)]


def _resolve_test(family: str, groups: Optional[int] = None, dim: Optional[int] = None) -> PublicTest:
    return create_test(family, groups=groups, dim=dim)


def _effect_template(args: argparse.Namespace, value: Optional[float] = None) -> EffectSpec:
    """Forma del efecto según la familia; value (o --mean, o 1) fija su magnitud."""
    if value is None:
        value = args.mean if args.mean is not None else 1.0
    if args.test in ("z", "t"):
        return ScalarEffect(value)
    if args.test == "anova":
        if args.groups is None:
            raise InputFormatError("ANOVA requiere --groups")
        return AnovaEffect(value, args.groups)
    if args.dim is None:
        raise InputFormatError("El test multivariado requiere --dim")
    if args.mean_pattern == "first":
        return MeanVectorEffect.from_sequence([value] + [0.0] * (args.dim - 1))
    return MeanVectorEffect.uniform(value, args.dim)


def _known_effect(args: argparse.Namespace) -> EffectSpec:
    if args.mean is None:
        raise InputFormatError("Se requiere --mean (efecto bajo la alternativa)")
    return _effect_template(args)


def cmd_run(args: argparse.Namespace) -> int:
    """Ejecuta el test privado sobre el CSV y escribe un objeto JSON."""
    request = RunRequest(
        input=args.input,
        test=args.test,
        epsilon=args.epsilon,
        alpha=args.alpha,
        seed=args.seed,
        m=args.m,
        alpha0=args.alpha0,
        target_power=args.target_power if args.optimize else None,
        effect_min=args.effect_min,
        effect_max=args.effect_max,
        output=args.output,
    )

    data = read_dataset(request.input, request.test)
    groups = len(data.groups()) if request.test == "anova" else None
    test = _resolve_test(request.test, groups=groups, dim=data.dim if request.test == "mvn-mean" else None)

    if request.target_power is not None:
        # El optimizador solo usa n, que es público; nunca mira los valores
        template = {
            "z": lambda: ScalarEffect(1.0),
            "t": lambda: ScalarEffect(1.0),
            "anova": lambda: AnovaEffect(1.0, groups),
            "mvn-mean": lambda: MeanVectorEffect.uniform(1.0, data.dim),
        }[request.test]()
        optimizer_settings = load_optimizer_settings()
        grid = geometric_effect_grid(
            template, request.effect_min, request.effect_max, optimizer_settings.effect_grid_length
        )
        chosen = optimize_target_power(
            test, data.n, request.epsilon, request.alpha, request.target_power, grid,
            optimizer_settings, load_power_settings()
        )
        m, alpha0 = min(chosen.m, data.n), chosen.alpha0
    else:
        m, alpha0 = request.m, request.alpha0

    config = ToTConfig(epsilon=request.epsilon, alpha=request.alpha, m=m, alpha0=alpha0, seed=request.seed)
    result = run_tot(data, test, config, max_workers=load_system_settings().max_workers)
    write_json(result.to_dict(), request.output)
    return 0


def _power_row(point: Dict[str, float], family: Optional[str], power_settings) -> Dict[str, float]:
    for key in ("epsilon", "alpha", "m", "alpha0"):
        if key not in point:
            raise InputFormatError(f"Cada punto de la rejilla requiere '{key}'", context={"punto": point})

    epsilon, alpha, alpha0 = point["epsilon"], point["alpha"], point["alpha0"]
    m = int(point["m"])
    n = int(point["n"]) if "n" in point else None
    public_power = math.nan

    if "theta" in point:
        theta = point["theta"]
    elif n is not None and "effect" in point and family is not None:
        dim = int(point.get("d", 1))
        test = _resolve_test(family, groups=int(point.get("groups", 2)) if family == "anova" else None,
                             dim=dim if family == "mvn-mean" else None)
        effect: EffectSpec
        if family == "anova":
            effect = AnovaEffect(point["effect"], test.groups)
        elif family == "mvn-mean":
            effect = MeanVectorEffect.uniform(point["effect"], dim)
        else:
            effect = ScalarEffect(point["effect"])
        theta = test.power(n // m, effect, alpha0)
        public_power = test.power(n, effect, alpha)
    else:
        raise InputFormatError("Cada punto requiere 'theta' o bien 'n', 'effect' y --test", context={"punto": point})

    row = {
        "n": n if n is not None else math.nan,
        "epsilon": epsilon,
        "alpha": alpha,
        "m": m,
        "alpha0": alpha0,
        "theta": theta,
        "tot_power": tot_power(PowerQuery(epsilon, alpha, m, alpha0, theta), power_settings),
        "pb_power": math.nan,
        "canonne_bound": math.nan,
        "public_power": public_power,
    }
    if m % 2 == 1:
        keep = point.get("pb_p", randomized_response_keep_probability(epsilon))
        row["pb_power"] = pb_power(m, keep, alpha0, theta)
    if n is not None and all(k in point for k in ("d", "delta", "gamma")):
        row["canonne_bound"] = canonne_type1_lower_bound(
            CanonneQuery(n, int(point["d"]), epsilon, point["delta"], point["gamma"])
        )
    return row


def cmd_power(args: argparse.Namespace) -> int:
    """Tabla de potencia analítica (sin muestreo)."""
    power_settings = load_power_settings()

    if args.table_multipliers:
        epsilons = _float_list(args.epsilons)
        rows = []
        for theta, alpha0, rho, alpha in MULTIPLIER_ROWS:
            multipliers = sample_size_multipliers(theta, alpha0, rho, alpha, epsilons, power_settings)
            for epsilon, m_tilde in multipliers.items():
                rows.append({
                    "theta": theta, "alpha0": alpha0, "rho": rho, "alpha": alpha,
                    "epsilon": epsilon, "m_tilde": m_tilde,
                })
        write_table(pd.DataFrame(rows, columns=["theta", "alpha0", "rho", "alpha", "epsilon", "m_tilde"]),
                    args.output)
        return 0

    if args.grid is None:
        raise InputFormatError("power requiere --grid o --table-multipliers")
    points = parse_grid(args.grid, GRID_KEYS + ["groups"])
    rows = [_power_row(point, args.test, power_settings) for point in points]
    write_table(pd.DataFrame(rows, columns=POWER_COLUMNS), args.output)
    return 0


def cmd_optimize(args: argparse.Namespace) -> int:
    """(m, α₀) óptimos para cada n; opcionalmente la potencia en --mean."""
    if args.test is None:
        raise InputFormatError("optimize requiere --test")
    test = _resolve_test(args.test, groups=args.groups, dim=args.dim)
    optimizer_settings = load_optimizer_settings()
    power_settings = load_power_settings()
    n_values = _int_list(args.n_values) if args.n_values else [args.n]
    if any(n is None or n < 1 for n in n_values):
        raise InputFormatError("optimize requiere --n o --n-values positivos")

    rows = []
    for n in n_values:
        result: OptimizerResult
        if args.target_power is not None:
            if args.effect_min is None or args.effect_max is None:
                raise InputFormatError("--target-power requiere --effect-min y --effect-max")
            grid = geometric_effect_grid(
                _effect_template(args), args.effect_min, args.effect_max, optimizer_settings.effect_grid_length
            )
            result = optimize_target_power(
                test, n, args.epsilon, args.alpha, args.target_power, grid, optimizer_settings, power_settings
            )
        else:
            result = optimize_known_effect(
                test, n, _known_effect(args), args.epsilon, args.alpha, optimizer_settings, power_settings
            )

        row = {"n": n, "epsilon": args.epsilon, "alpha": args.alpha}
        row.update(result.to_dict())
        row["power_at_effect"] = (
            power_at(result, test, n, _known_effect(args), args.epsilon, args.alpha, power_settings)
            if args.mean is not None else math.nan
        )
        rows.append(row)

    write_table(pd.DataFrame(rows), args.output)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    """Estimación Monte-Carlo: una fila CSV (o JSON con --uniformity)."""
    if args.theta is not None:
        generator = GeneratorSpec.bernoulli(args.theta)
    else:
        if args.test is None or args.n is None:
            raise InputFormatError("simulate requiere --theta, o bien --test y --n")
        family = {"z": "normal", "t": "normal", "anova": "anova", "mvn-mean": "mvn"}[args.test]
        # Sin --mean se simula bajo H₀
        effect = _effect_template(args, 0.0 if args.mean is None else args.mean)
        generator = GeneratorSpec(family, args.n, effect)

    config = None
    if args.engine in ("tot", "pb"):
        if args.m is None or args.alpha0 is None:
            raise InputFormatError(f"El motor '{args.engine}' requiere --m y --alpha0")
        config = ToTConfig(epsilon=args.epsilon, alpha=args.alpha, m=args.m, alpha0=args.alpha0, seed=args.seed)
    pb_p = args.pb_p
    if args.engine == "pb" and pb_p is None:
        pb_p = randomized_response_keep_probability(args.epsilon)

    plan = SimPlan(
        generator=generator,
        engine=args.engine,
        replicates=args.replicates,
        seed=args.seed,
        config=config,
        test=args.test,
        alpha=args.alpha,
        pb_p=pb_p,
    )
    settings = load_simulation_settings()

    if args.uniformity:
        write_json(estimate_pvalue_uniformity(plan, settings=settings).to_dict(), args.output)
        return 0

    result = estimate_rejection_rate(plan, settings)
    row = {"engine": args.engine}
    row.update(generator.to_dict())
    row.update(result.to_dict())
    write_table(pd.DataFrame([row]), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    system = load_system_settings()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--test", choices=available_families(), help="Familia del test público")
    common.add_argument("--epsilon", type=float, default=system.default_epsilon)
    common.add_argument("--alpha", type=float, default=system.default_alpha)
    common.add_argument("--seed", type=int, default=system.default_seed)
    common.add_argument("--output", default=None, help="Archivo de salida (stdout por defecto)")
    common.add_argument("--m", type=int, default=None)
    common.add_argument("--alpha0", type=float, default=None)
    common.add_argument("--mean", type=float, default=None,
                        help="Efecto: μ/σ (z, t), η (anova) o componente de μ (mvn-mean)")
    common.add_argument("--groups", type=int, default=None)
    common.add_argument("--dim", type=int, default=None)
    common.add_argument("--mean-pattern", choices=["uniform", "first"], default="uniform",
                        help="mvn-mean: todas las componentes iguales o solo la primera")
    common.add_argument("--target-power", type=float, default=None)
    common.add_argument("--effect-min", type=float, default=None)
    common.add_argument("--effect-max", type=float, default=None)
    common.add_argument("--n", type=int, default=None)

    parser = argparse.ArgumentParser(prog="tot-privacy", description="Tests de hipótesis privados (ToT)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", parents=[common], help="Ejecutar el test privado sobre un CSV")
    run.add_argument("--input", required=True)
    run.add_argument("--optimize", action="store_true", help="Elegir (m, α₀) con --target-power")
    run.set_defaults(handler=cmd_run)

    power = subparsers.add_parser("power", parents=[common], help="Tablas de potencia analítica")
    power.add_argument("--grid", default=None, help="YAML o 'clave=v1,v2;clave2=v3'")
    power.add_argument("--table-multipliers", action="store_true")
    power.add_argument("--epsilons", default="1,0.1,0.01", help="ε de la tabla de multiplicadores")
    power.set_defaults(handler=cmd_power)

    optimize = subparsers.add_parser("optimize", parents=[common], help="Optimizar (m, α₀)")
    optimize.add_argument("--n-values", default=None, help="Lista de n separada por comas")
    optimize.set_defaults(handler=cmd_optimize)

    simulate = subparsers.add_parser("simulate", parents=[common], help="Simulación Monte-Carlo")
    simulate.add_argument("--engine", choices=["tot", "public", "pb"], default="tot")
    simulate.add_argument("--replicates", type=int, default=10000)
    simulate.add_argument("--theta", type=float, default=None, help="Sub-test sintético con potencia θ")
    simulate.add_argument("--pb-p", type=float, default=None, help="Probabilidad de conservar cada decisión")
    simulate.add_argument("--uniformity", action="store_true", help="KS de los p-valores bajo H₀")
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada; devuelve el estado de salida."""
    try:
        manager = get_config_manager()
        if manager.has_files:
            ConfigValidator(manager).require_valid()
        configure_logging(load_system_settings(manager))
        parser = build_parser()
    except BaseTotException as e:
        sys.stderr.write(f"error: {e}\n")
        return 2

    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (BaseTotException, OSError, ValueError) as e:
        logger.error(f"Comando {args.command} fallido: {type(e).__name__}")
        sys.stderr.write(f"error: {e}\n")
        return 1
