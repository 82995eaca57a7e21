#include "epistemic/parser.hpp"

#include <sstream>
#include <vector>

#include "epistemic/error.hpp"

namespace epi {

namespace {

std::string format_syntax_error(int line, int column, const std::string& msg,
                                const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": " << msg;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::string message,
                         std::vector<std::string> expected)
    : Error(format_syntax_error(line, column, message, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  Ident, Bot, Top, Not, BoxTok, DiaTok, LBracket, RBracket, And, Or,
  Implies, Iff, Cond, LParen, RParen, End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Not: return "'~'";
    case Tok::BoxTok: return "'[]'";
    case Tok::DiaTok: return "'<>'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Cond: return "'=>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    auto emit = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l, cl});
      advance(n);
    };
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') ||
                              (s[j] >= '0' && s[j] <= '9') || s[j] == '_')) {
        ++j;
      }
      std::string word(s.substr(i, j - i));
      if (word == "bot") {
        emit(Tok::Bot, j - i);
      } else if (word == "top") {
        emit(Tok::Top, j - i);
      } else if (is_reserved_word(word)) {
        throw SyntaxError(l, cl, "reserved word '" + word + "' cannot be an atom");
      } else {
        emit(Tok::Ident, j - i);
      }
    } else if (starts("[]")) {
      emit(Tok::BoxTok, 2);
    } else if (starts("<->")) {
      emit(Tok::Iff, 3);
    } else if (starts("<>")) {
      emit(Tok::DiaTok, 2);
    } else if (starts("->")) {
      emit(Tok::Implies, 2);
    } else if (starts("=>")) {
      emit(Tok::Cond, 2);
    } else if (c == '[') {
      emit(Tok::LBracket, 1);
    } else if (c == ']') {
      emit(Tok::RBracket, 1);
    } else if (c == '~') {
      emit(Tok::Not, 1);
    } else if (c == '&') {
      emit(Tok::And, 1);
    } else if (c == '|') {
      emit(Tok::Or, 1);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else {
      throw SyntaxError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = conditional();
    expect_end({Tok::And, Tok::Or, Tok::Implies, Tok::Iff, Tok::Cond});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<Tok> expected) {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(describe(t));
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, msg.empty() ? "unexpected " + found : msg,
                      std::move(names));
  }

  void expect_end(std::vector<Tok> continuations) {
    if (peek().kind == Tok::End) return;
    continuations.push_back(Tok::End);
    fail("", std::move(continuations));
  }

  void expect(Tok k, std::vector<Tok> also = {}) {
    if (accept(k)) return;
    also.insert(also.begin(), k);
    fail("", std::move(also));
  }

  Formula conditional() {
    Formula a = biconditional();
    if (!accept(Tok::Cond)) return a;
    Formula c = biconditional();
    if (peek().kind == Tok::Cond) {
      fail("nested '=>' requires parentheses", {});
    }
    return cond(std::move(a), std::move(c));
  }

  Formula biconditional() {
    Formula a = implication();
    if (!accept(Tok::Iff)) return a;
    Formula b = implication();
    if (peek().kind == Tok::Iff) {
      fail("chained '<->' requires parentheses", {});
    }
    return iff(std::move(a), std::move(b));
  }

  Formula implication() {
    std::vector<Formula> parts{disjunction()};
    while (accept(Tok::Implies)) parts.push_back(disjunction());
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
      acc = implies(parts[i], std::move(acc));
    }
    return acc;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Tok::Or)) acc = disj(std::move(acc), conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = conj(std::move(acc), unary());
    return acc;
  }

  Formula unary() {
    // Prefix operators are collected first so long runs do not recurse.
    std::vector<std::pair<Tok, Formula>> prefix;
    for (;;) {
      if (accept(Tok::Not)) {
        prefix.emplace_back(Tok::Not, Formula());
      } else if (accept(Tok::BoxTok)) {
        prefix.emplace_back(Tok::BoxTok, Formula());
      } else if (accept(Tok::DiaTok)) {
        prefix.emplace_back(Tok::DiaTok, Formula());
      } else if (accept(Tok::LBracket)) {
        Formula a = conditional();
        expect(Tok::RBracket, {Tok::And, Tok::Or, Tok::Implies, Tok::Iff, Tok::Cond});
        prefix.emplace_back(Tok::LBracket, std::move(a));
      } else {
        break;
      }
    }
    Formula f = primary();
    for (std::size_t i = prefix.size(); i-- > 0;) {
      switch (prefix[i].first) {
        case Tok::Not: f = neg(std::move(f)); break;
        case Tok::BoxTok: f = box(std::move(f)); break;
        case Tok::DiaTok: f = diamond(std::move(f)); break;
        default: f = update(prefix[i].second, std::move(f)); break;
      }
    }
    return f;
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++pos_;
        return Formula::atom(t.text);
      }
      case Tok::Bot: ++pos_; return Formula::bottom();
      case Tok::Top: ++pos_; return Formula::top();
      case Tok::LParen: {
        ++pos_;
        Formula f = conditional();
        expect(Tok::RParen, {Tok::And, Tok::Or, Tok::Implies, Tok::Iff, Tok::Cond});
        return f;
      }
      default:
        fail("", {Tok::Ident, Tok::Bot, Tok::Top, Tok::Not, Tok::BoxTok,
                  Tok::DiaTok, Tok::LBracket, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength of the node's own syntax.
int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::Cond: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom: out += f.name(); return;
    case Op::Bottom: out += "bot"; return;
    case Op::Not:
    case Op::Box:
    case Op::Diamond: {
      // Walk a run of prefix operators without recursing.
      const Formula* g = &f;
      while (g->op() == Op::Not || g->op() == Op::Box || g->op() == Op::Diamond) {
        out += g->op() == Op::Not ? "~" : g->op() == Op::Box ? "[]" : "<>";
        g = &g->child(0);
      }
      render_operand(*g, precedence(*g) < 4, out);
      return;
    }
    case Op::Update:
      out += '[';
      render_into(f.child(0), out);
      out += ']';
      render_operand(f.child(1), precedence(f.child(1)) < 4, out);
      return;
    case Op::And:
    case Op::Or: {
      // Left spine of the chain; right operands of the same operator need
      // parentheses to keep the tree shape.
      std::vector<const Formula*> rights;
      const Formula* g = &f;
      while (g->op() == f.op()) {
        rights.push_back(&g->child(1));
        g = &g->child(0);
      }
      int prec = precedence(f);
      render_operand(*g, precedence(*g) < prec, out);
      const char* sep = f.op() == Op::And ? " & " : " | ";
      for (std::size_t i = rights.size(); i-- > 0;) {
        out += sep;
        render_operand(*rights[i], precedence(*rights[i]) <= prec, out);
      }
      return;
    }
    case Op::Cond:
      render_operand(f.child(0), precedence(f.child(0)) <= 1, out);
      out += " => ";
      render_operand(f.child(1), precedence(f.child(1)) <= 1, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) {
  return Parser(tokenize(text)).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace epi
