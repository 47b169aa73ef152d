#include "axcat/litmus.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace axcat {

LitmusSyntaxError::LitmusSyntaxError(std::size_t line, std::size_t column,
                                     const std::string& message)
    : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool is_register_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'r') return false;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::optional<ProcId> process_label(std::string_view s) {
  if (s.size() < 2 || s[0] != 'P') return std::nullopt;
  ProcId p = 0;
  const auto* first = s.data() + 1;
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr != last || p < 0) return std::nullopt;
  if (s.size() > 2 && s[1] == '0') return std::nullopt;  // no leading zeros
  return p;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LitmusTest parse_test() {
    LitmusTest t;
    expect_keyword("test");
    t.name = test_name();
    expect(";");

    if (peek_keyword("init")) {
      expect_keyword("init");
      expect("{");
      while (!peek("}")) {
        const auto [line, col] = position();
        std::string addr = identifier("address");
        if (is_register_name(addr)) fail(line, col, "'" + addr + "' is a register, not an address");
        expect("=");
        const Value v = integer();
        expect(";");
        if (!t.initial.emplace(addr, v).second) {
          fail(line, col, "duplicate initial value for '" + addr + "'");
        }
      }
      expect("}");
    }

    while (peek_process()) {
      const auto [line, col] = position();
      const std::string label = identifier("process label");
      const auto proc = process_label(label);
      if (!proc || static_cast<std::size_t>(*proc) != t.processes.size()) {
        fail(line, col, "expected process P" + std::to_string(t.processes.size()));
      }
      expect(":");
      expect("{");
      std::vector<Instruction> body;
      std::set<std::string> regs;
      while (!peek("}")) body.push_back(instruction(regs));
      expect("}");
      t.processes.push_back(std::move(body));
    }
    if (t.processes.empty()) {
      const auto [line, col] = position();
      fail(line, col, "expected at least one process block 'P0: { ... }'");
    }

    if (peek_keyword("exists")) {
      expect_keyword("exists");
      expect("(");
      t.condition = condition(t, false);
      expect(")");
      expect(";");
    }
    skip();
    if (pos_ != text_.size()) {
      const auto [line, col] = position();
      fail(line, col, "unexpected trailing input");
    }
    return t;
  }

  Condition parse_bare_condition(const LitmusTest& t) {
    if (peek_keyword("exists")) expect_keyword("exists");
    const bool parens = peek("(");
    if (parens) expect("(");
    Condition c = condition(t, true);
    if (parens) expect(")");
    if (peek(";")) expect(";");
    skip();
    if (pos_ != text_.size()) {
      const auto [line, col] = position();
      fail(line, col, "unexpected trailing input");
    }
    return c;
  }

 private:
  Instruction instruction(std::set<std::string>& regs) {
    const auto [line, col] = position();
    const std::string lhs = identifier("address or register");
    expect("<-");
    skip();
    const char c = pos_ < text_.size() ? text_[pos_] : '\0';
    Instruction out;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      if (is_register_name(lhs)) {
        fail(line, col, "cannot write a constant to register '" + lhs + "'");
      }
      out = WriteInstr{lhs, integer()};
    } else if (is_ident_start(c)) {
      const auto [rl, rc] = position();
      std::string rhs = identifier("address");
      if (!is_register_name(lhs)) fail(line, col, "read target '" + lhs + "' is not a register");
      if (is_register_name(rhs)) fail(rl, rc, "'" + rhs + "' is a register, not an address");
      if (!regs.insert(lhs).second) fail(line, col, "duplicate register '" + lhs + "'");
      out = ReadInstr{std::move(rhs), lhs};
    } else {
      const auto [el, ec] = position();
      fail(el, ec, "expected an integer or an address after '<-'");
    }
    expect(";");
    return out;
  }

  Condition condition(const LitmusTest& t, bool allow_comma) {
    Condition c;
    c.atoms.push_back(atom(t));
    while (peek("/\\") || (allow_comma && peek(","))) {
      if (peek(",")) {
        expect(",");
      } else {
        expect("/\\");
      }
      c.atoms.push_back(atom(t));
    }
    return c;
  }

  ConditionAtom atom(const LitmusTest& t) {
    const auto [line, col] = position();
    const std::string first = identifier("condition atom");
    ConditionAtom a;
    if (auto proc = process_label(first); proc && peek(":")) {
      expect(":");
      const auto [rl, rc] = position();
      a.proc = *proc;
      a.name = identifier("register");
      if (static_cast<std::size_t>(*proc) >= t.processes.size()) {
        fail(line, col, "unknown process '" + first + "' in condition");
      }
      bool found = false;
      for (const auto& ins : t.processes[static_cast<std::size_t>(*proc)]) {
        if (const auto* r = std::get_if<ReadInstr>(&ins); r && r->reg == a.name) found = true;
      }
      if (!found) fail(rl, rc, "unknown register '" + a.name + "' in " + first);
    } else {
      a.name = first;
      bool found = t.initial.contains(first);
      for (const auto& body : t.processes) {
        for (const auto& ins : body) {
          std::visit([&](const auto& i) { found = found || i.addr == first; }, ins);
        }
      }
      if (!found) fail(line, col, "unknown address '" + first + "' in condition");
    }
    expect("=");
    a.value = integer();
    return a;
  }

  std::string test_name() {
    skip();
    const auto [line, col] = position();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (is_ident_char(text_[pos_]) || text_[pos_] == '-' || text_[pos_] == '.' ||
            text_[pos_] == '+')) {
      advance();
    }
    if (pos_ == start) fail(line, col, "expected a test name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier(const char* what) {
    skip();
    const auto [line, col] = position();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
      fail(line, col, std::string("expected ") + what);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  Value integer() {
    skip();
    const auto [line, col] = position();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    Value v = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) fail(line, col, "expected an integer");
    return v;
  }

  bool peek(std::string_view tok) {
    skip();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool peek_keyword(std::string_view kw) {
    skip();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    return end >= text_.size() || !is_ident_char(text_[end]);
  }

  bool peek_process() {
    skip();
    std::size_t end = pos_;
    while (end < text_.size() && is_ident_char(text_[end])) ++end;
    return process_label(text_.substr(pos_, end - pos_)).has_value();
  }

  void expect(std::string_view tok) {
    if (!peek(tok)) {
      const auto [line, col] = position();
      fail(line, col, "expected '" + std::string(tok) + "'");
    }
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!peek_keyword(kw)) {
      const auto [line, col] = position();
      fail(line, col, "expected '" + std::string(kw) + "'");
    }
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() {
    skip();
    return {line_, col_};
  }

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw LitmusSyntaxError(line, col, msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

LitmusTest parse_litmus(std::string_view text) { return Parser(text).parse_test(); }

Condition parse_condition(std::string_view text, const LitmusTest& t) {
  return Parser(text).parse_bare_condition(t);
}

std::string to_string(const Condition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    if (i) out += " /\\ ";
    const auto& a = c.atoms[i];
    if (a.proc) out += "P" + std::to_string(*a.proc) + ":";
    out += a.name + "=" + std::to_string(a.value);
  }
  return out;
}

std::string print_litmus(const LitmusTest& t) {
  std::ostringstream os;
  os << "test " << t.name << ";\n";
  if (!t.initial.empty()) {
    os << "init {";
    for (const auto& [addr, v] : t.initial) os << ' ' << addr << '=' << v << ';';
    os << " }\n";
  }
  for (std::size_t p = 0; p < t.processes.size(); ++p) {
    os << 'P' << p << ": {";
    for (const auto& ins : t.processes[p]) {
      if (const auto* w = std::get_if<WriteInstr>(&ins)) {
        os << ' ' << w->addr << " <- " << w->value << ';';
      } else {
        const auto& r = std::get<ReadInstr>(ins);
        os << ' ' << r.reg << " <- " << r.addr << ';';
      }
    }
    os << " }\n";
  }
  if (t.condition) os << "exists (" << to_string(*t.condition) << ");\n";
  return os.str();
}

void check_litmus(const LitmusTest& t) {
  if (t.processes.empty()) throw UsageError("litmus test has no processes");
  std::set<std::string> addresses;
  for (const auto& [addr, v] : t.initial) addresses.insert(addr);
  for (std::size_t p = 0; p < t.processes.size(); ++p) {
    std::set<std::string> regs;
    for (const auto& ins : t.processes[p]) {
      if (const auto* r = std::get_if<ReadInstr>(&ins)) {
        if (!is_register_name(r->reg)) throw UsageError("'" + r->reg + "' is not a register name");
        if (!regs.insert(r->reg).second) {
          throw UsageError("duplicate register '" + r->reg + "' in P" + std::to_string(p));
        }
      }
      std::visit([&](const auto& i) { addresses.insert(i.addr); }, ins);
    }
  }
  for (const auto& addr : addresses) {
    if (is_register_name(addr) || addr.empty()) {
      throw UsageError("'" + addr + "' is not a valid address name");
    }
  }
  if (!t.condition) return;
  for (const auto& a : t.condition->atoms) {
    if (a.proc) {
      if (*a.proc < 0 || static_cast<std::size_t>(*a.proc) >= t.processes.size()) {
        throw UsageError("condition names unknown process P" + std::to_string(*a.proc));
      }
      bool found = false;
      for (const auto& ins : t.processes[static_cast<std::size_t>(*a.proc)]) {
        if (const auto* r = std::get_if<ReadInstr>(&ins); r && r->reg == a.name) found = true;
      }
      if (!found) throw UsageError("condition names unknown register " + a.name);
    } else if (!addresses.contains(a.name)) {
      throw UsageError("condition names unknown address " + a.name);
    }
  }
}

}  // namespace axcat
