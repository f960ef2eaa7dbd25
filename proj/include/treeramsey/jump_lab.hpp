#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treeramsey/reduction.hpp"
#include "treeramsey/tt_solver.hpp"

namespace treeramsey {

/// Cantor pairing (a+b)(a+b+1)/2 + b; throws std::overflow_error when the
/// result does not fit in 64 bits. cantor_unpair is its total inverse: every
/// 64-bit value decodes to exactly one pair.
uint64_t cantor_pair(uint64_t a, uint64_t b);
std::pair<uint64_t, uint64_t> cantor_unpair(uint64_t z);

enum class Op { Halt = 0, Inc = 1, Dec = 2, Jz = 3, Query = 4 };

/// One register-machine instruction. `a` is the register operand (the queried
/// index's register for Query); `b` is the absolute jump target for Jz and
/// the result register for Query, unused otherwise.
struct Instr {
  Op op = Op::Halt;
  uint64_t a = 0;
  uint64_t b = 0;
};

bool operator==(const Instr& x, const Instr& y);

/// A register machine program under a total encoding: instruction code =
/// opcode + 5 * payload (payload = register, or a Cantor pair of the two
/// operands); program code 0 is the empty program, and any other code c
/// decodes as (head, tail) = cantor_unpair(c - 1). Every 64-bit value is the
/// code of some program; assembling a program whose code would not fit throws
/// std::overflow_error.
class MachineProgram {
 public:
  static MachineProgram decode(uint64_t code);
  static MachineProgram assemble(std::vector<Instr> instructions);

  uint64_t code() const;
  const std::vector<Instr>& instructions() const { return instructions_; }
  std::string disassemble() const;

 private:
  explicit MachineProgram(std::vector<Instr> instructions);
  std::vector<Instr> instructions_;
};

/// A finite approximation to an oracle set: membership is decided only for
/// indices below the horizon.
class OracleApprox {
 public:
  static OracleApprox empty(uint64_t horizon);
  static OracleApprox evens(uint64_t horizon);
  static OracleApprox of_members(uint64_t horizon, std::vector<uint64_t> members);

  uint64_t horizon() const { return horizon_; }
  int bit(uint64_t i) const;
  std::vector<uint64_t> members() const;

 private:
  OracleApprox(uint64_t horizon, std::vector<uint64_t> members);
  uint64_t horizon_;
  std::vector<uint64_t> members_;
};

enum class RunStatus { Halted, Running, OracleInsufficient };

std::string to_string(RunStatus s);

/// Runs the program on input m (placed in register 0) against the oracle
/// view, with every resource bounded by t: at most t steps are taken (halting
/// itself consumes one), no register value may exceed t, and no queried index
/// may exceed t. Exceeding any bound reports Running; querying at or beyond
/// the view's horizon reports OracleInsufficient; falling off the end of the
/// program halts.
RunStatus step_run(const MachineProgram& program, const OracleApprox& oracle, uint64_t m,
                   uint64_t t);

/// One bounded jump stage over an oracle view.
struct JumpStageSet {
  int level = 1;
  uint64_t stage = 0;
  std::vector<uint64_t> members;

  /// The stage set itself as an oracle view; members at or beyond the horizon
  /// are outside the view and dropped.
  OracleApprox as_oracle(uint64_t horizon) const;
};

/// Stage s of the bounded jump of the view X: all pairs cantor_pair(m, e)
/// with m, e < s whose program e halts on m within bound s against X.
JumpStageSet jump_stage(const OracleApprox& oracle, uint64_t s);

/// Iterates jump_stage `levels` times at one stage bound, re-viewing each
/// stage set with horizon s before taking the next stage. Level j in the
/// result is the j-th iterate.
std::vector<JumpStageSet> iter_jump_stage(const OracleApprox& oracle, uint64_t s, int levels);

enum class CertStatus { Consistent, Refuted, OracleInsufficient };

std::string to_string(CertStatus s);

/// Bounded check of a claim that program `halts_in` halts exactly on the
/// members of the set the view Y approximates and `halts_out` exactly on the
/// non-members. An input m < Y.horizon refutes the claim when both programs
/// halt on m within bound `b`, when m is in Y and `halts_out` halts, or when
/// m is out of Y and `halts_in` halts. If nothing refutes but some run could
/// not be decided at this view, the check is OracleInsufficient.
CertStatus check_reduction_certificate(uint64_t halts_in, uint64_t halts_out,
                                       const OracleApprox& oracle, uint64_t b);

/// The oracle price recorded by a reduction ledger, in jump levels.
int ledger_jump_cost(const ReductionLedger& ledger);
int ledger_jump_cost(const SolveResult& result);

}  // namespace treeramsey
