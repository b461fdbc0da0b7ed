#include "ctc/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ctc/analysis.hpp"
#include "ctc/errors.hpp"

namespace ctc {

namespace {

enum class Tok {
  Name,     // lower-case identifier
  Coname,   // 'name
  Upper,    // constant
  Nil,
  Tau,
  LParen,
  RParen,
  Dot,
  Plus,
  Bar2,
  Backslash,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Slash,
  Comma,
  Equals,
  Semi,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Name:
    case Tok::Upper: return "'" + t.text + "'";
    case Tok::Coname: return t.text;
    default: return "'" + t.text + "'";
  }
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, co = col;
    auto ident_len = [&](std::size_t from) {
      std::size_t j = from;
      while (j < src.size() && ident_char(src[j])) ++j;
      return j - from;
    };
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t n = ident_len(i);
      std::string word(src.substr(i, n));
      Tok k = word == "nil" ? Tok::Nil : word == "tau" ? Tok::Tau : Tok::Name;
      out.push_back({k, word, l, co});
      advance(n);
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t n = ident_len(i);
      out.push_back({Tok::Upper, std::string(src.substr(i, n)), l, co});
      advance(n);
      continue;
    }
    if (c == '\'') {
      if (i + 1 >= src.size() || !std::islower(static_cast<unsigned char>(src[i + 1])))
        throw SourceError(l, co, "expected an action name after '");
      std::size_t n = ident_len(i + 1);
      std::string word(src.substr(i + 1, n));
      if (word == "tau") throw SourceError(l, co, "tau has no complement");
      if (word == "nil") throw SourceError(l, co, "'nil' is not an action");
      out.push_back({Tok::Coname, "'" + word, l, co});
      advance(n + 1);
      continue;
    }
    if (c == '|') {
      if (i + 1 < src.size() && src[i + 1] == '|') {
        out.push_back({Tok::Bar2, "||", l, co});
        advance(2);
        continue;
      }
      throw SourceError(l, co, "expected '||'");
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '.': k = Tok::Dot; break;
      case '+': k = Tok::Plus; break;
      case '\\': k = Tok::Backslash; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '/': k = Tok::Slash; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      case ';': k = Tok::Semi; break;
      default: throw SourceError(l, co, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, co});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Process term() { return sum(); }

  DefEnv program(bool check) {
    DefEnv env;
    while (peek().kind != Tok::End) {
      const Token& name = expect(Tok::Upper, "a constant name");
      expect(Tok::Equals, "'='");
      Process body = term();
      expect(Tok::Semi, "';'");
      Symbol s(name.text);
      if (env.contains(s)) throw DuplicateDefinition(name.text);
      env.define(s, body);
    }
    if (check) validate(env);
    return env;
  }

  void finish() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()));
  }

private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t j = std::min(pos_ + k, toks_.size() - 1);
    return toks_[j];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw SourceError(t.line, t.col, msg); }

  static bool is_action(Tok k) { return k == Tok::Name || k == Tok::Coname || k == Tok::Tau; }

  static Action to_action(const Token& t) {
    switch (t.kind) {
      case Tok::Tau: return Action::tau();
      case Tok::Coname: return Action::coname(t.text.substr(1));
      default: return Action::name(t.text);
    }
  }

  Process sum() {
    Process p = par();
    while (accept(Tok::Plus)) p = Process::sum(p, par());
    return p;
  }

  Process par() {
    Process p = prefixed();
    while (accept(Tok::Bar2)) p = Process::par(p, prefixed());
    return p;
  }

  // Is the token stream at `( act || ... || act ) .` ?
  bool at_multi_prefix() const {
    if (peek().kind != Tok::LParen) return false;
    std::size_t k = 1;
    if (!is_action(peek(k).kind)) return false;
    ++k;
    while (peek(k).kind == Tok::Bar2) {
      if (!is_action(peek(k + 1).kind)) return false;
      k += 2;
    }
    return peek(k).kind == Tok::RParen && peek(k + 1).kind == Tok::Dot;
  }

  Process prefixed() {
    if (is_action(peek().kind)) {
      const Token& t = next();
      if (peek().kind != Tok::Dot) fail(peek(), "expected '.' after action " + t.text);
      next();
      return Process::prefix(to_action(t), prefixed());
    }
    if (at_multi_prefix()) {
      next();
      std::vector<Action> acts;
      std::vector<Token> toks;
      do {
        toks.push_back(next());
        acts.push_back(to_action(toks.back()));
      } while (accept(Tok::Bar2));
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (!acts[i].is_tau() && acts[j] == complement(acts[i]))
            fail(toks[i], "actions " + acts[j].str() + " and " + acts[i].str() +
                              " of one multi-prefix are complementary (requires alpha_i != 'alpha_j)");
      return Process::multi_prefix(Step(std::move(acts)), prefixed());
    }
    return postfix();
  }

  Process postfix() {
    Process p = atom();
    for (;;) {
      if (accept(Tok::Backslash)) {
        expect(Tok::LBrace, "'{'");
        std::set<Symbol> labels;
        if (peek().kind != Tok::RBrace) {
          do {
            const Token& t = peek();
            if (t.kind != Tok::Name) fail(t, "restriction sets hold plain names, found " + describe(t));
            labels.insert(Symbol(next().text));
          } while (accept(Tok::Comma));
        }
        expect(Tok::RBrace, "'}'");
        p = Process::restrict(p, std::move(labels));
      } else if (accept(Tok::LBracket)) {
        std::map<Symbol, Symbol> m;
        if (peek().kind != Tok::RBracket) {
          do {
            const Token& to = peek();
            if (to.kind != Tok::Name) fail(to, "relabelling maps plain names, found " + describe(to));
            next();
            expect(Tok::Slash, "'/'");
            const Token& from = peek();
            if (from.kind != Tok::Name) fail(from, "relabelling maps plain names, found " + describe(from));
            next();
            Symbol key(from.text);
            if (m.count(key)) fail(from, "name " + from.text + " relabelled twice");
            m.emplace(key, Symbol(to.text));
          } while (accept(Tok::Comma));
        }
        expect(Tok::RBracket, "']'");
        p = Process::relabel(p, RelabelFn(m));
      } else {
        return p;
      }
    }
  }

  Process atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Nil: next(); return Process::nil();
      case Tok::Upper: next(); return Process::constant(t.text);
      case Tok::LParen: {
        next();
        Process p = term();
        expect(Tok::RParen, "')'");
        return p;
      }
      default: fail(t, "expected a term, found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Process parse_term(std::string_view text) {
  Parser p(lex(text));
  Process t = p.term();
  p.finish();
  return t;
}

DefEnv parse_program(std::string_view text) {
  Parser p(lex(text));
  return p.program(true);
}

DefEnv parse_program_unchecked(std::string_view text) {
  Parser p(lex(text));
  return p.program(false);
}

}  // namespace ctc
