#include "treeramsey/jump_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace treeramsey {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

constexpr uint64_t kMaxMaterializedHorizon = uint64_t{1} << 20;
constexpr uint64_t kMaxStageBound = 512;

unsigned __int128 triangle(unsigned __int128 x) { return x * (x + 1) / 2; }

uint64_t instr_code(const Instr& ins) {
  uint64_t payload = 0;
  switch (ins.op) {
    case Op::Halt:
    case Op::Inc:
    case Op::Dec:
      payload = ins.a;
      break;
    case Op::Jz:
    case Op::Query:
      payload = cantor_pair(ins.a, ins.b);
      break;
  }
  const unsigned __int128 code =
      static_cast<unsigned __int128>(payload) * 5 + static_cast<uint64_t>(ins.op);
  if (code > std::numeric_limits<uint64_t>::max())
    throw std::overflow_error("instruction code does not fit in 64 bits");
  return static_cast<uint64_t>(code);
}

Instr decode_instr(uint64_t code) {
  Instr ins;
  ins.op = static_cast<Op>(code % 5);
  const uint64_t payload = code / 5;
  switch (ins.op) {
    case Op::Halt:
    case Op::Inc:
    case Op::Dec:
      ins.a = payload;
      break;
    case Op::Jz:
    case Op::Query: {
      const auto [a, b] = cantor_unpair(payload);
      ins.a = a;
      ins.b = b;
      break;
    }
  }
  return ins;
}

std::string op_name(Op op) {
  switch (op) {
    case Op::Halt:
      return "HALT";
    case Op::Inc:
      return "INC";
    case Op::Dec:
      return "DEC";
    case Op::Jz:
      return "JZ";
    case Op::Query:
      return "QUERY";
  }
  return "?";
}

}  // namespace

uint64_t cantor_pair(uint64_t a, uint64_t b) {
  const unsigned __int128 z = triangle(static_cast<unsigned __int128>(a) + b) + b;
  if (z > std::numeric_limits<uint64_t>::max())
    throw std::overflow_error("cantor pair does not fit in 64 bits");
  return static_cast<uint64_t>(z);
}

std::pair<uint64_t, uint64_t> cantor_unpair(uint64_t z) {
  uint64_t w = static_cast<uint64_t>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (w > 0 && triangle(w) > z) --w;
  while (triangle(w + 1) <= z) ++w;
  const uint64_t b = z - static_cast<uint64_t>(triangle(w));
  return {w - b, b};
}

bool operator==(const Instr& x, const Instr& y) {
  return x.op == y.op && x.a == y.a && x.b == y.b;
}

MachineProgram::MachineProgram(std::vector<Instr> instructions)
    : instructions_(std::move(instructions)) {}

MachineProgram MachineProgram::decode(uint64_t code) {
  std::vector<Instr> instructions;
  while (code != 0) {
    const auto [head, tail] = cantor_unpair(code - 1);
    instructions.push_back(decode_instr(head));
    code = tail;
  }
  return MachineProgram(std::move(instructions));
}

MachineProgram MachineProgram::assemble(std::vector<Instr> instructions) {
  MachineProgram program(std::move(instructions));
  (void)program.code();
  return program;
}

uint64_t MachineProgram::code() const {
  uint64_t acc = 0;
  for (auto it = instructions_.rbegin(); it != instructions_.rend(); ++it) {
    const uint64_t paired = cantor_pair(instr_code(*it), acc);
    if (paired == std::numeric_limits<uint64_t>::max())
      throw std::overflow_error("program code does not fit in 64 bits");
    acc = paired + 1;
  }
  return acc;
}

std::string MachineProgram::disassemble() const {
  std::string out;
  for (const Instr& ins : instructions_) {
    if (!out.empty()) out += "\n";
    out += op_name(ins.op);
    switch (ins.op) {
      case Op::Halt:
        break;
      case Op::Inc:
      case Op::Dec:
        out += " " + std::to_string(ins.a);
        break;
      case Op::Jz:
      case Op::Query:
        out += " " + std::to_string(ins.a) + " " + std::to_string(ins.b);
        break;
    }
  }
  return out;
}

OracleApprox::OracleApprox(uint64_t horizon, std::vector<uint64_t> members)
    : horizon_(horizon), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (uint64_t m : members_)
    if (m >= horizon_) bad("oracle members must lie below the horizon");
}

OracleApprox OracleApprox::empty(uint64_t horizon) { return OracleApprox(horizon, {}); }

OracleApprox OracleApprox::evens(uint64_t horizon) {
  if (horizon > kMaxMaterializedHorizon)
    bad("evens views materialize their members; keep the horizon at or below 2^20");
  std::vector<uint64_t> members;
  for (uint64_t m = 0; m < horizon; m += 2) members.push_back(m);
  return OracleApprox(horizon, std::move(members));
}

OracleApprox OracleApprox::of_members(uint64_t horizon, std::vector<uint64_t> members) {
  return OracleApprox(horizon, std::move(members));
}

int OracleApprox::bit(uint64_t i) const {
  if (i >= horizon_) bad("queried index lies beyond the view's horizon");
  return std::binary_search(members_.begin(), members_.end(), i) ? 1 : 0;
}

std::vector<uint64_t> OracleApprox::members() const { return members_; }

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Halted:
      return "halted";
    case RunStatus::Running:
      return "running";
    case RunStatus::OracleInsufficient:
      return "oracle-insufficient";
  }
  return "?";
}

RunStatus step_run(const MachineProgram& program, const OracleApprox& oracle, uint64_t m,
                   uint64_t t) {
  if (m > t) return RunStatus::Running;
  const std::vector<Instr>& ins = program.instructions();
  const uint64_t len = ins.size();
  std::map<uint64_t, uint64_t> regs;
  regs[0] = m;
  uint64_t pc = 0;
  for (uint64_t step = 0; step < t; ++step) {
    if (pc >= len || ins[pc].op == Op::Halt) return RunStatus::Halted;
    const Instr& i = ins[pc];
    switch (i.op) {
      case Op::Inc: {
        uint64_t& r = regs[i.a];
        if (r >= t) return RunStatus::Running;
        ++r;
        ++pc;
        break;
      }
      case Op::Dec: {
        auto it = regs.find(i.a);
        if (it != regs.end() && it->second > 0) --it->second;
        ++pc;
        break;
      }
      case Op::Jz: {
        auto it = regs.find(i.a);
        const uint64_t value = it == regs.end() ? 0 : it->second;
        if (value == 0)
          pc = i.b;
        else
          ++pc;
        break;
      }
      case Op::Query: {
        auto it = regs.find(i.a);
        const uint64_t q = it == regs.end() ? 0 : it->second;
        if (q > t) return RunStatus::Running;
        if (q >= oracle.horizon()) return RunStatus::OracleInsufficient;
        regs[i.b] = static_cast<uint64_t>(oracle.bit(q));
        ++pc;
        break;
      }
      case Op::Halt:
        break;
    }
  }
  return RunStatus::Running;
}

OracleApprox JumpStageSet::as_oracle(uint64_t horizon) const {
  std::vector<uint64_t> kept;
  for (uint64_t m : members)
    if (m < horizon) kept.push_back(m);
  return OracleApprox::of_members(horizon, std::move(kept));
}

JumpStageSet jump_stage(const OracleApprox& oracle, uint64_t s) {
  if (s > kMaxStageBound) bad("stage bounds above 512 are not materialized");
  JumpStageSet out;
  out.level = 1;
  out.stage = s;
  for (uint64_t e = 0; e < s; ++e) {
    const MachineProgram program = MachineProgram::decode(e);
    for (uint64_t m = 0; m < s; ++m)
      if (step_run(program, oracle, m, s) == RunStatus::Halted)
        out.members.push_back(cantor_pair(m, e));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<JumpStageSet> iter_jump_stage(const OracleApprox& oracle, uint64_t s, int levels) {
  if (levels < 0) bad("the number of jump levels must be nonnegative");
  std::vector<JumpStageSet> out;
  OracleApprox view = oracle;
  for (int level = 1; level <= levels; ++level) {
    JumpStageSet stage = jump_stage(view, s);
    stage.level = level;
    view = stage.as_oracle(s);
    out.push_back(std::move(stage));
  }
  return out;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Consistent:
      return "consistent";
    case CertStatus::Refuted:
      return "refuted";
    case CertStatus::OracleInsufficient:
      return "oracle-insufficient";
  }
  return "?";
}

CertStatus check_reduction_certificate(uint64_t halts_in, uint64_t halts_out,
                                       const OracleApprox& oracle, uint64_t b) {
  if (oracle.horizon() > kMaxMaterializedHorizon)
    bad("certificate checks walk every input below the horizon; keep it at or below 2^20");
  const MachineProgram program_in = MachineProgram::decode(halts_in);
  const MachineProgram program_out = MachineProgram::decode(halts_out);
  bool insufficient = false;
  for (uint64_t m = 0; m < oracle.horizon(); ++m) {
    const RunStatus in_status = step_run(program_in, oracle, m, b);
    const RunStatus out_status = step_run(program_out, oracle, m, b);
    if (in_status == RunStatus::OracleInsufficient || out_status == RunStatus::OracleInsufficient)
      insufficient = true;
    const bool member = oracle.bit(m) == 1;
    if (in_status == RunStatus::Halted && out_status == RunStatus::Halted)
      return CertStatus::Refuted;
    if (member && out_status == RunStatus::Halted) return CertStatus::Refuted;
    if (!member && in_status == RunStatus::Halted) return CertStatus::Refuted;
  }
  return insufficient ? CertStatus::OracleInsufficient : CertStatus::Consistent;
}

int ledger_jump_cost(const ReductionLedger& ledger) { return ledger.jump_levels; }

int ledger_jump_cost(const SolveResult& result) { return result.ledger.jump_levels; }

}  // namespace treeramsey
