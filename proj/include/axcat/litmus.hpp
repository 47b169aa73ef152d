#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "axcat/errors.hpp"
#include "axcat/execution.hpp"

namespace axcat {

struct WriteInstr {
  std::string addr;
  Value value = 0;
  friend bool operator==(const WriteInstr&, const WriteInstr&) = default;
};

struct ReadInstr {
  std::string addr;
  std::string reg;
  friend bool operator==(const ReadInstr&, const ReadInstr&) = default;
};

using Instruction = std::variant<WriteInstr, ReadInstr>;

struct RegisterRef {
  ProcId proc = 0;
  std::string reg;
  auto operator<=>(const RegisterRef&) const = default;
};

// `P<proc>:<reg>=<value>` when proc is set, `<addr>=<value>` on final memory
// otherwise.
struct ConditionAtom {
  std::optional<ProcId> proc;
  std::string name;
  Value value = 0;
  friend bool operator==(const ConditionAtom&, const ConditionAtom&) = default;
};

// A conjunction of atoms.
struct Condition {
  std::vector<ConditionAtom> atoms;
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct LitmusTest {
  std::string name;
  std::vector<std::vector<Instruction>> processes;
  std::map<std::string, Value> initial;  // unlisted addresses start at 0
  std::optional<Condition> condition;
  friend bool operator==(const LitmusTest&, const LitmusTest&) = default;
};

class LitmusSyntaxError : public UsageError {
 public:
  LitmusSyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Grammar (whitespace-insensitive, `//` starts a comment):
//
//   test <name>;
//   init { x=0; y=0; }                     optional
//   P0: { x <- 1; r0 <- y; }               one block per process, in order
//   exists (P0:r0=0 /\ P1:r1=0 /\ x=1);    optional
//
// `<addr> <- <int>` writes, `<reg> <- <addr>` reads. Registers are `r`
// followed by digits; any other identifier is an address.
LitmusTest parse_litmus(std::string_view text);

// Canonical text; parse_litmus(print_litmus(t)) == t.
std::string print_litmus(const LitmusTest& t);

// Parses a bare conjunction such as `P0:r0=0 /\ P1:r1=0`; `,` also
// separates atoms. References are checked against `t`.
Condition parse_condition(std::string_view text, const LitmusTest& t);

std::string to_string(const Condition& c);

// Throws UsageError on: no processes, a duplicate register within a
// process, or a condition naming an unknown process/register/address.
void check_litmus(const LitmusTest& t);

bool is_register_name(std::string_view s);

}  // namespace axcat
