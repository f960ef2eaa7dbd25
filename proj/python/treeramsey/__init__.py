"""Finite tree Ramsey solving, the Ramsey bridge, and the jump laboratory.

Structured values cross the boundary as the same canonical JSON the CLI
reads and writes; ``json.loads`` turns any result into plain dicts.
"""

from ._core import (
    CapExceeded,
    DepthExhausted,
    cantor_pair,
    cantor_unpair,
    chain_code,
    eval_chain,
    eval_tuple,
    gen_chain_coloring,
    gen_tuple_coloring,
    jump_approx,
    ledger_jump_cost,
    mix64,
    node_code,
    program_instructions,
    reduce_step,
    rt_solve,
    run_program,
    tt_solve,
    tuple_code,
    verify_solve,
)

__all__ = [
    "CapExceeded",
    "DepthExhausted",
    "cantor_pair",
    "cantor_unpair",
    "chain_code",
    "eval_chain",
    "eval_tuple",
    "gen_chain_coloring",
    "gen_tuple_coloring",
    "jump_approx",
    "ledger_jump_cost",
    "mix64",
    "node_code",
    "program_instructions",
    "reduce_step",
    "rt_solve",
    "run_program",
    "tt_solve",
    "tuple_code",
    "verify_solve",
]
