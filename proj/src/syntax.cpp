#include "g4uip/syntax.hpp"

#include <cctype>
#include <vector>

#include "g4uip/sequent.hpp"

namespace g4uip {

namespace {

enum class Tok { False, True, Ident, Not, Box, Dia, And, Or, Imp, LParen, RParen, Comma, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return src.substr(i, lit.size()) == lit; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t at = i;
    if (starts("|-")) {
      out.push_back({Tok::Turnstile, "|-", at});
      i += 2;
    } else if (starts("->")) {
      out.push_back({Tok::Imp, "->", at});
      i += 2;
    } else if (starts("[]")) {
      out.push_back({Tok::Box, "[]", at});
      i += 2;
    } else if (starts("<>")) {
      out.push_back({Tok::Dia, "<>", at});
      i += 2;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", at});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", at});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", at});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", at});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", at});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", at});
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok k = word == "false" ? Tok::False : word == "true" ? Tok::True : Tok::Ident;
      out.push_back({k, std::move(word), at});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Formula formula() { return imp(); }

  Multiset list_until(Tok stop) {
    Multiset out;
    if (peek().kind == stop) return out;
    out.insert(formula());
    while (accept(Tok::Comma)) out.insert(formula());
    return out;
  }

  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " but reached end of input"
                                               : ", found '" + t.text + "'"),
                     t.pos);
  }

 private:
  Formula imp() {
    Formula lhs = disj();
    if (accept(Tok::Imp)) return Formula::imp(lhs, imp());
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (accept(Tok::Or)) acc = Formula::disj(acc, conj());
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = Formula::conj(acc, unary());
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::neg(unary());
      case Tok::Box:
        ++pos_;
        return Formula::box(unary());
      case Tok::Dia:
        ++pos_;
        return Formula::dia(unary());
      case Tok::False:
        ++pos_;
        return Formula::bot();
      case Tok::True:
        ++pos_;
        return Formula::top();
      case Tok::Ident: {
        Formula v = Formula::var(t.text);
        ++pos_;
        return v;
      }
      case Tok::LParen: {
        ++pos_;
        Formula inner = formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Symbols {
  const char* bot;
  const char* top;
  const char* box;
  const char* dia;
  const char* conj;
  const char* disj;
  const char* imp;
};

constexpr Symbols kText{"false", "true", "[]", "<>", " & ", " | ", " -> "};
constexpr Symbols kLatex{"\\bot", "\\top", "\\Box ", "\\Diamond ", " \\wedge ", " \\vee ", " \\to "};

// Binary operands that are themselves binary are always parenthesised.
void emit(Formula f, const Symbols& sym, std::string& out) {
  auto operand = [&](Formula g) {
    if (g.is_binary() && !g.is_top()) {
      out += '(';
      emit(g, sym, out);
      out += ')';
    } else {
      emit(g, sym, out);
    }
  };
  if (f.is_top()) {
    out += sym.top;
    return;
  }
  switch (f.kind()) {
    case Kind::Bot:
      out += sym.bot;
      break;
    case Kind::Var:
      out += f.name();
      break;
    case Kind::Box:
      out += sym.box;
      operand(f.body());
      break;
    case Kind::Dia:
      out += sym.dia;
      operand(f.body());
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      operand(f.lhs());
      out += f.is(Kind::And) ? sym.conj : f.is(Kind::Or) ? sym.disj : sym.imp;
      operand(f.rhs());
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return f;
}

Multiset parse_formula_list(std::string_view text) {
  Parser p(text);
  Multiset m = p.list_until(Tok::End);
  if (p.peek().kind != Tok::End) p.fail("expected ',' or end of input");
  return m;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Multiset ante = p.list_until(Tok::Turnstile);
  p.expect(Tok::Turnstile, "'|-'");
  Succedent succ;
  if (p.peek().kind != Tok::End) succ = p.formula();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return Sequent(std::move(ante), succ);
}

std::string to_text(Formula phi) {
  std::string out;
  emit(phi, kText, out);
  return out;
}

std::string to_latex(Formula phi) {
  std::string out;
  emit(phi, kLatex, out);
  return out;
}

nlohmann::json to_json(Formula phi) {
  using nlohmann::json;
  switch (phi.kind()) {
    case Kind::Bot:
      return json{{"bot", true}};
    case Kind::Var:
      return json{{"var", phi.name()}};
    case Kind::And:
      return json{{"and", json::array({to_json(phi.lhs()), to_json(phi.rhs())})}};
    case Kind::Or:
      return json{{"or", json::array({to_json(phi.lhs()), to_json(phi.rhs())})}};
    case Kind::Imp:
      return json{{"imp", json::array({to_json(phi.lhs()), to_json(phi.rhs())})}};
    case Kind::Box:
      return json{{"box", to_json(phi.body())}};
    case Kind::Dia:
      return json{{"dia", to_json(phi.body())}};
  }
  return {};
}

Formula formula_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("formula JSON must be a one-key object");
  auto it = j.begin();
  const std::string key = it.key();
  const nlohmann::json& val = it.value();
  auto pair = [&](auto make) {
    if (!val.is_array() || val.size() != 2) throw std::invalid_argument("'" + key + "' expects two operands");
    return make(formula_from_json(val[0]), formula_from_json(val[1]));
  };
  if (key == "bot") return Formula::bot();
  if (key == "var") return Formula::var(val.get<std::string>());
  if (key == "and") return pair(Formula::conj);
  if (key == "or") return pair(Formula::disj);
  if (key == "imp") return pair(Formula::imp);
  if (key == "box") return Formula::box(formula_from_json(val));
  if (key == "dia") return Formula::dia(formula_from_json(val));
  throw std::invalid_argument("unknown formula tag '" + key + "'");
}

std::string render(Formula phi, Format fmt) {
  switch (fmt) {
    case Format::Text:
      return to_text(phi);
    case Format::Latex:
      return to_latex(phi);
    case Format::Json:
      return to_json(phi).dump();
  }
  return {};
}

}  // namespace g4uip
