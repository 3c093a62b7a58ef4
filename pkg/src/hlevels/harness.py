"""Reference-data ingestion and regeneration of the comparison tables.

Builds the ten-state comparison grid (Klein-Gordon, spinless Salpeter,
quasiclassical, reference) in machine-readable form, recomputes the
relative-accuracy table from those live values, and annotates each cell
MATCH or MISMATCH against the previously published numbers.  Published
epsilon values are only ever compared against, never copied into output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, asdict

from .constants import Constants, default_constants, derive
from .errors import DuplicateState, ParseError
from .salpeter import SolverConfig, lowest_levels
from .spectra import QuantumState, kg_level, qc_complex_mass, qc_level

TABLE_STATES = (
    QuantumState(0, 0),
    QuantumState(0, 1),
    QuantumState(0, 2),
    QuantumState(0, 3),
    QuantumState(0, 4),
    QuantumState(1, 0),
    QuantumState(1, 1),
    QuantumState(1, 2),
    QuantumState(2, 0),
    QuantumState(2, 1),
)

MODELS = ("kg", "ss", "qc", "nist")

# Reference level energies (eV), spin-averaged, as published.
_REFERENCE_EV = {
    QuantumState(0, 0): -13.59843445,
    QuantumState(0, 1): -3.39959812,
    QuantumState(0, 2): -1.51092434,
    QuantumState(0, 3): -0.84989357,
    QuantumState(0, 4): -0.54393196,
    QuantumState(1, 0): -3.39962387,
    QuantumState(1, 1): -1.51093197,
    QuantumState(1, 2): -0.84989548,
    QuantumState(2, 0): -1.51093960,
    QuantumState(2, 1): -0.84989834,
}

# Published relative accuracies (percent) and imaginary masses (MeV), used
# only for MATCH/MISMATCH annotation.  The 2S quasiclassical entry is kept
# with the exponent consistent with the underlying energies (1.87e-3, not
# the misprinted 1.87e-4).
_PUBLISHED_EPS = {
    "kg": (6.00e-2, 5.45e-2, 5.45e-2, 5.45e-2, 5.45e-2,
           5.73e-2, 5.45e-2, 5.54e-2, 5.63e-2, 5.45e-2),
    "ss": (4.41e-2, 5.22e-2, 5.37e-2, 5.41e-2, 5.42e-2,
           4.79e-2, 5.27e-2, 5.37e-2, 4.98e-2, 5.30e-2),
    "qc": (2.41e-3, 1.11e-3, 2.41e-3, 3.84e-4, 1.59e-4,
           1.87e-3, 8.89e-3, 3.84e-4, 1.39e-3, 7.20e-4),
}
_PUBLISHED_M_IM = (3.421587, 1.710793, 1.140530, 0.855397, 0.684317,
                   1.710793, 1.140530, 0.855397, 1.140530, 0.855397)

_EPS_MATCH_RTOL = 0.02


@dataclass(frozen=True)
class ReferenceDataset:
    """Map from quantum state to reference binding energy (eV)."""

    entries: dict
    source: str = "builtin"

    def __post_init__(self):
        for state, value in self.entries.items():
            if value >= 0.0:
                raise ValueError(f"reference energy for {state.label} must be negative")


@dataclass(frozen=True)
class ComparisonRow:
    """One state's energies (eV), relative errors (percent) and M_im (MeV)."""

    state: str
    energies: dict
    epsilons: dict
    m_im: float


@dataclass(frozen=True)
class Environment:
    """Shared inputs for table generation."""

    constants: Constants = field(default_factory=default_constants)
    solver: SolverConfig = field(default_factory=SolverConfig)
    reference: ReferenceDataset = None
    z: int = 1


def builtin_reference() -> ReferenceDataset:
    """The ten tabulated reference states 1S..3P."""
    return ReferenceDataset(entries=dict(_REFERENCE_EV), source="builtin")


def load_reference_csv(path) -> ReferenceDataset:
    """Parse a reference dataset CSV with header state,k,l,T_eV.

    Lines starting with '#' and blank lines are skipped.  Raises
    ParseError with the offending line number, DuplicateState on repeats.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    entries = {}
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if [f.strip() for f in line.split(",")] != ["state", "k", "l", "T_eV"]:
                raise ParseError("expected header 'state,k,l,T_eV'", line=lineno)
            header_seen = True
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 4:
            raise ParseError(f"expected 4 fields, got {len(fields)}", line=lineno)
        label, k_text, l_text, t_text = fields
        try:
            k, l = int(k_text), int(l_text)
            value = float(t_text)
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
        try:
            state = QuantumState(k=k, l=l)
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
        if label != state.label:
            raise ParseError(f"label {label!r} does not match (k={k}, l={l})", line=lineno)
        if state in entries:
            raise DuplicateState(f"state {label} appears more than once (line {lineno})")
        if value >= 0.0:
            raise ParseError(f"binding energy must be negative, got {value}", line=lineno)
        entries[state] = value
    return ReferenceDataset(entries=entries, source=str(path))


def relative_error(t_model: float, t_ref: float) -> float:
    """epsilon = |(t_model - t_ref)/t_ref| * 100, in percent."""
    if t_ref == 0.0:
        raise ZeroDivisionError("reference energy is zero")
    return abs((t_model - t_ref) / t_ref) * 100.0


def _salpeter_column(states, env: Environment) -> dict:
    """Salpeter energies for the requested states, grouped by l."""
    by_l = {}
    for st in states:
        by_l[st.l] = max(by_l.get(st.l, 0), st.k + 1)
    out = {}
    for l, count in sorted(by_l.items()):
        for level in lowest_levels(l, count, env.solver, env.constants, z=env.z):
            out[level.state] = level.value
    return {st: out[st] for st in states}


def generate_table1(
    models=MODELS,
    states=TABLE_STATES,
    env: Environment = None,
) -> list[dict]:
    """Rows of the energy-comparison table, ordered as requested.

    Each row maps 'state' to the label and each model name to its energy
    in eV, or None when that cell fails to compute.
    """
    env = env or Environment()
    reference = env.reference or builtin_reference()
    states = tuple(states)
    ss_values = {}
    if "ss" in models and states:
        try:
            ss_values = _salpeter_column(states, env)
        except Exception:
            ss_values = {}
    rows = []
    for st in states:
        row = {"state": st.label}
        for model in models:
            try:
                if model == "kg":
                    row[model] = kg_level(st, env.z, env.constants).value
                elif model == "qc":
                    row[model] = qc_level(st, derive(env.constants), env.constants).value
                elif model == "ss":
                    row[model] = ss_values.get(st)
                elif model == "nist":
                    row[model] = reference.entries.get(st)
                else:
                    raise ValueError(f"unknown model {model!r}")
            except ValueError:
                raise
            except Exception:
                row[model] = None
        rows.append(row)
    return rows


def generate_table2(env: Environment = None, table1: list[dict] = None) -> list[dict]:
    """Relative-accuracy rows recomputed from live table-1 values.

    Each row carries eps_kg/eps_ss/eps_qc (percent), m_im (MeV), and a
    'flags' dict marking every cell MATCH or MISMATCH against the
    published number at 2% relative tolerance (UNAVAILABLE when the
    underlying energy could not be computed).
    """
    env = env or Environment()
    if table1 is None:
        table1 = generate_table1(env=env)
    d = derive(env.constants)
    rows = []
    for i, t1 in enumerate(table1):
        st = TABLE_STATES[i]
        if t1["state"] != st.label:
            raise ValueError("table 1 rows must cover the standard ten states in order")
        t_ref = t1.get("nist")
        row = {"state": st.label, "flags": {}}
        for model in ("kg", "ss", "qc"):
            value = t1.get(model)
            if value is None or t_ref is None:
                row[f"eps_{model}"] = None
                row["flags"][model] = "UNAVAILABLE"
                continue
            eps = relative_error(value, t_ref)
            row[f"eps_{model}"] = eps
            published = _PUBLISHED_EPS[model][i]
            ok = abs(eps - published) <= _EPS_MATCH_RTOL * abs(published)
            row["flags"][model] = "MATCH" if ok else "MISMATCH"
        m_im = abs(qc_complex_mass(st, d, env.constants).im)
        row["m_im"] = m_im
        ok = abs(m_im - _PUBLISHED_M_IM[i]) <= _EPS_MATCH_RTOL * _PUBLISHED_M_IM[i]
        row["flags"]["m_im"] = "MATCH" if ok else "MISMATCH"
        rows.append(row)
    return rows


# --- serialization -----------------------------------------------------------

def _fmt_ev(value) -> str:
    return "" if value is None else f"{value:.8f}"


def table1_to_text(rows) -> str:
    out = [f"{'state':>5} {'T_KG':>14} {'T_SS':>14} {'T_QC':>14} {'T_ref':>14}"]
    for r in rows:
        out.append(
            f"{r['state']:>5} "
            + " ".join(f"{_fmt_ev(r.get(m)):>14}" for m in ("kg", "ss", "qc", "nist"))
        )
    return "\n".join(out) + "\n"


def table2_to_text(rows) -> str:
    out = [f"{'state':>5} {'eps_KG':>10} {'eps_SS':>10} {'eps_QC':>10} {'M_im':>10}  flags"]
    for r in rows:
        cells = []
        for m in ("kg", "ss", "qc"):
            v = r.get(f"eps_{m}")
            cells.append("" if v is None else f"{v:.3e}")
        flag_text = ",".join(f"{k}={v}" for k, v in r["flags"].items())
        out.append(
            f"{r['state']:>5} "
            + " ".join(f"{c:>10}" for c in cells)
            + f" {r['m_im']:10.6f}  {flag_text}"
        )
    return "\n".join(out) + "\n"


def table1_to_csv(rows) -> str:
    """Round-trippable CSV (17 significant digits)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["state", "kg", "ss", "qc", "nist"])
    for r in rows:
        writer.writerow(
            [r["state"]]
            + ["" if r.get(m) is None else f"{r[m]:.17g}" for m in ("kg", "ss", "qc", "nist")]
        )
    return buf.getvalue()


def table1_from_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["state", "kg", "ss", "qc", "nist"]:
        raise ParseError("unexpected table header", line=1)
    rows = []
    for record in reader:
        row = {"state": record[0]}
        for model, cell in zip(("kg", "ss", "qc", "nist"), record[1:]):
            row[model] = None if cell == "" else float(cell)
        rows.append(row)
    return rows


def table2_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["state", "eps_kg", "eps_ss", "eps_qc", "m_im",
                     "flag_kg", "flag_ss", "flag_qc", "flag_m_im"])
    for r in rows:
        writer.writerow(
            [r["state"]]
            + ["" if r.get(f"eps_{m}") is None else f"{r[f'eps_{m}']:.17g}"
               for m in ("kg", "ss", "qc")]
            + [f"{r['m_im']:.6f}"]
            + [r["flags"][k] for k in ("kg", "ss", "qc", "m_im")]
        )
    return buf.getvalue()


def tables_to_json(table1, table2, env: Environment = None) -> str:
    env = env or Environment()
    mismatches = [
        {"state": r["state"], "column": column, "flag": flag}
        for r in table2
        for column, flag in r["flags"].items()
        if flag != "MATCH"
    ]
    doc = {
        "table": {"energies": table1, "accuracies": table2},
        "models": list(MODELS),
        "constants": asdict(env.constants),
        "mismatches": mismatches,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
