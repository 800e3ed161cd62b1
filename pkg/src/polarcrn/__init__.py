"""polarcrn: polar-code decoders compiled to catalytic chemical reaction networks.

The package has three layers:

* exact floating-point reference decoders (``codes``, ``kernels``, ``bp``, ``sc``),
* a CRN compiler that lowers the decoding kernels, consensus hard decisions and
  partial-sum selectors into catalytic reactions (``crn``, ``synth``),
* a deterministic mass-action ODE simulator with timed fuel injections (``sim``).

The ``cli`` module ties them together; ``targets`` holds the golden runs the
``reproduce`` subcommand checks against.
"""

from polarcrn.codes import CodeConfig, bit_reverse
from polarcrn.kernels import (
    DegenerateInputError,
    f_lr,
    f_prob,
    g_lr,
    g_prob,
    g_prob_usum,
    hard_decision,
    prob_from_lr,
)
from polarcrn.bp import MessageGrid, BpResult, bp_init, bp_run
from polarcrn.sc import ScScheduleEntry, ScDecodeResult, partial_sum, sc_decode_ref, sc_schedule
from polarcrn.crn import (
    Crn,
    Reaction,
    Species,
    conservation_groups,
    crn_from_text,
    crn_to_text,
    mass_action_derivatives,
    validate,
)
from polarcrn.synth import (
    CrnBuilder,
    InjectionEvent,
    InjectionSchedule,
    SynthesisReport,
    VariableBinding,
    schedule_from_text,
    schedule_to_text,
    synth_bp_decoder,
    synth_consensus,
    synth_divide,
    synth_formula_i,
    synth_formula_ii,
    synth_formula_iii,
    synth_multiply,
    synth_sc_decoder,
    synth_selector,
)
from polarcrn.sim import (
    ReadoutError,
    SolverConfig,
    SolverError,
    Trajectory,
    conservation_audit,
    integrate,
    readout,
    steady_state_reached,
)

__version__ = "0.1.0"

__all__ = [
    "CodeConfig",
    "bit_reverse",
    "DegenerateInputError",
    "prob_from_lr",
    "f_prob",
    "g_prob",
    "g_prob_usum",
    "f_lr",
    "g_lr",
    "hard_decision",
    "MessageGrid",
    "BpResult",
    "bp_init",
    "bp_run",
    "ScScheduleEntry",
    "ScDecodeResult",
    "sc_schedule",
    "sc_decode_ref",
    "partial_sum",
    "Species",
    "Reaction",
    "Crn",
    "mass_action_derivatives",
    "conservation_groups",
    "validate",
    "crn_to_text",
    "crn_from_text",
    "VariableBinding",
    "InjectionEvent",
    "InjectionSchedule",
    "SynthesisReport",
    "CrnBuilder",
    "synth_multiply",
    "synth_divide",
    "synth_formula_i",
    "synth_formula_ii",
    "synth_formula_iii",
    "synth_consensus",
    "synth_selector",
    "synth_bp_decoder",
    "synth_sc_decoder",
    "schedule_to_text",
    "schedule_from_text",
    "SolverConfig",
    "Trajectory",
    "SolverError",
    "ReadoutError",
    "integrate",
    "steady_state_reached",
    "readout",
    "conservation_audit",
]
