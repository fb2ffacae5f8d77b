#include "dung/apx.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dung/error.hpp"

namespace dung {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t line() const noexcept { return line_; }

  /// Skips whitespace and comments; false at end of input.
  bool more() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return true;
      }
    }
    return false;
  }

  std::string_view word() {
    more();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected identifier");
    token_line_ = line_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    more();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    token_line_ = line_;
  }

  /// At end of input the error belongs to the last statement, not the trailing blank lines.
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw ParseError(token_line_, what + ", found end of input");
    throw ParseError(line_, what + ", found '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  static bool is_word_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t token_line_ = 1;
};

struct PendingAttack {
  std::string from;
  std::string to;
  std::size_t line;
};

std::string argument_name(Lexer& lex) {
  const std::size_t line = lex.line();
  std::string name(lex.word());
  if (!is_valid_argument_name(name)) throw ParseError(line, "invalid argument name '" + name + "'");
  return name;
}

}  // namespace

Framework parse_apx(std::string_view text) {
  Lexer lex(text);
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> declared;
  std::vector<PendingAttack> pending;

  while (lex.more()) {
    const std::size_t line = lex.line();
    const std::string_view predicate = lex.word();
    if (predicate == "arg") {
      lex.expect('(');
      std::string name = argument_name(lex);
      lex.expect(')');
      lex.expect('.');
      if (!declared.emplace(name, line).second)
        throw ParseError(line, "duplicate argument '" + name + "'");
      names.push_back(std::move(name));
    } else if (predicate == "defeat" || predicate == "att") {
      lex.expect('(');
      std::string from = argument_name(lex);
      lex.expect(',');
      std::string to = argument_name(lex);
      lex.expect(')');
      lex.expect('.');
      pending.push_back({std::move(from), std::move(to), line});
    } else {
      throw ParseError(line, "unknown predicate '" + std::string(predicate) + "'");
    }
  }

  std::unordered_map<std::string, ArgId> ids;
  for (std::size_t i = 0; i < names.size(); ++i) ids.emplace(names[i], static_cast<ArgId>(i));
  std::vector<Attack> attacks;
  attacks.reserve(pending.size());
  for (const PendingAttack& p : pending) {
    const auto from = ids.find(p.from);
    if (from == ids.end()) throw ParseError(p.line, "undeclared argument '" + p.from + "'");
    const auto to = ids.find(p.to);
    if (to == ids.end()) throw ParseError(p.line, "undeclared argument '" + p.to + "'");
    attacks.push_back({from->second, to->second});
  }
  try {
    return Framework(std::move(names), std::move(attacks));
  } catch (const InvalidFramework& e) {
    throw ParseError(lex.line(), e.what());
  }
}

Framework read_apx_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_apx(buf.str());
}

std::string serialize_apx(const Framework& af) {
  std::string out;
  for (const std::string& name : af.names()) {
    out += "arg(";
    out += name;
    out += ").\n";
  }
  for (const Attack& at : af.attacks()) {
    out += "defeat(";
    out += af.name(at.from);
    out += ',';
    out += af.name(at.to);
    out += ").\n";
  }
  return out;
}

}  // namespace dung
