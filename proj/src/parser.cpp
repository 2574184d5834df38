#include "dlm/parser.hpp"

#include <cctype>
#include <vector>

#include "dlm/derived.hpp"

namespace dlm {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

enum class Tok {
  ident,
  action_kw,  // tell+ tell- show+ show-
  lparen,
  rparen,
  lbrack,
  rbrack,
  langle,
  rangle,
  comma,
  tilde,
  amp,
  bar,
  arrow,
  iff,
  at,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if ((word == "tell" || word == "show") && i < s.size() && (s[i] == '+' || s[i] == '-') &&
          !(i + 1 < s.size() && s[i + 1] == '>')) {
        word += s[i++];
        out.push_back({Tok::action_kw, word, start});
      } else {
        out.push_back({Tok::ident, word, start});
      }
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::iff, "<->", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, "->", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(':
        kind = Tok::lparen;
        break;
      case ')':
        kind = Tok::rparen;
        break;
      case '[':
        kind = Tok::lbrack;
        break;
      case ']':
        kind = Tok::rbrack;
        break;
      case '<':
        kind = Tok::langle;
        break;
      case '>':
        kind = Tok::rangle;
        break;
      case ',':
        kind = Tok::comma;
        break;
      case '~':
        kind = Tok::tilde;
        break;
      case '&':
        kind = Tok::amp;
        break;
      case '|':
        kind = Tok::bar;
        break;
      case '@':
        kind = Tok::at;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const ActionRegistry& actions)
      : toks_(lex(text)), sig_(sig), actions_(actions) {}

  Formula formula_only() {
    Formula f = parse_iff();
    expect(Tok::end, "end of input");
    return f;
  }

  PointedAction action_only() {
    PointedAction a = parse_act();
    expect(Tok::end, "end of input");
    return a;
  }

  Atom atom_only() {
    Atom a;
    const Token& t = peek();
    if (t.kind == Tok::ident && t.text == "obs" && peek(1).kind == Tok::lparen) {
      a = parse_obs();
    } else {
      a = Atom::of_prop(prop(next()));
    }
    expect(Tok::end, "end of input");
    return a;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      throw ParseError(std::string("expected ") + what + (t.kind == Tok::end ? " but input ended" : " near '" + t.text + "'"),
                       t.pos);
    }
    return next();
  }

  AgentId agent(const Token& t) {
    if (t.kind != Tok::ident) throw ParseError("expected an agent name", t.pos);
    AgentId a{t.text};
    if (!sig_.has_agent(a)) throw ParseError("unknown agent '" + t.text + "'", t.pos);
    return a;
  }

  PropId prop(const Token& t) {
    if (t.kind != Tok::ident) throw ParseError("expected a proposition", t.pos);
    PropId p{t.text};
    if (!sig_.has_prop(p)) throw ParseError("unknown proposition '" + t.text + "'", t.pos);
    return p;
  }

  Literal literal() {
    const bool negative = accept(Tok::tilde);
    return {prop(next()), !negative};
  }

  Atom parse_obs() {
    next();  // obs
    expect(Tok::lparen, "'('");
    AgentId a = agent(next());
    expect(Tok::comma, "','");
    Literal l = literal();
    expect(Tok::rparen, "')'");
    return Atom::of_obs(std::move(a), std::move(l));
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::iff)) f = Formula::iff(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::arrow)) return Formula::implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::bar)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::amp)) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::tilde:
        next();
        return Formula::negate(parse_unary());
      case Tok::lbrack: {
        next();
        PointedAction a = parse_act();
        expect(Tok::rbrack, "']'");
        return Formula::box(std::move(a), parse_unary());
      }
      case Tok::langle: {
        next();
        PointedAction a = parse_act();
        expect(Tok::rangle, "'>'");
        return Formula::diamond(std::move(a), parse_unary());
      }
      case Tok::ident:
        if ((t.text == "B" || t.text == "Bhat") && peek(1).kind == Tok::lbrack) {
          const bool dual = t.text == "Bhat";
          next();
          next();
          AgentId a = agent(next());
          expect(Tok::rbrack, "']'");
          Formula body = parse_unary();
          return dual ? Formula::believable(std::move(a), std::move(body)) : Formula::believes(std::move(a), std::move(body));
        }
        return parse_primary();
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token& t = peek();
    if (accept(Tok::lparen)) {
      Formula f = parse_iff();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (t.kind != Tok::ident) {
      throw ParseError(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
    if (t.text == "true") {
      next();
      return Formula::top();
    }
    if (t.text == "false") {
      next();
      return Formula::bottom();
    }
    if (peek(1).kind == Tok::lparen) {
      if (t.text == "obs") return Formula::atom(parse_obs());
      if (auto m = parse_macro()) return *m;
    }
    return Formula::prop(prop(next()));
  }

  std::optional<Formula> parse_macro() {
    const Token& head = peek();
    const std::string& name = head.text;
    if (name != "Sim" && name != "Dis" && name != "O" && name != "Os" && name != "Bs" && name != "Surprise") {
      return std::nullopt;
    }
    next();
    next();  // (
    Formula out;
    try {
      if (name == "Sim" || name == "Dis") {
        AgentId a = agent(next());
        expect(Tok::comma, "','");
        AgentId b = agent(next());
        expect(Tok::comma, "','");
        PropId p = prop(next());
        if (a == b) throw ParseError(name + " needs two distinct agents", head.pos);
        out = name == "Sim" ? sim(a, b, p, sig_) : dis(a, b, p, sig_);
      } else if (name == "O" || name == "Os") {
        AgentId a = agent(next());
        expect(Tok::comma, "','");
        Literal l = literal();
        out = name == "O" ? epistemic_obs(a, l) : strong_epistemic_obs(a, others(sig_, a), l, sig_);
      } else if (name == "Bs") {
        AgentId b = agent(next());
        expect(Tok::comma, "','");
        Formula f = parse_iff();
        out = strong_belief(b, others(sig_, b), f, sig_);
      } else {
        const Token& k = next();
        if (k.kind != Tok::ident) throw ParseError("expected a surprise kind", k.pos);
        SurpriseKind kind;
        try {
          kind = surprise_kind_from_string(k.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), k.pos);
        }
        expect(Tok::comma, "','");
        AgentId a = agent(next());
        expect(Tok::comma, "','");
        PropId p = prop(next());
        out = surprise(kind, a, p);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), head.pos);
    }
    expect(Tok::rparen, "')'");
    return out;
  }

  PointedAction parse_act() {
    const Token& t = peek();
    if (accept(Tok::at)) {
      const Token& name = next();
      if (name.kind != Tok::ident) throw ParseError("expected an action name after '@'", name.pos);
      auto it = actions_.find(name.text);
      if (it == actions_.end()) throw ParseError("unknown action model '@" + name.text + "'", name.pos);
      return it->second;
    }
    if (t.kind != Tok::action_kw) throw ParseError("expected tell+, tell-, show+, show- or @name", t.pos);
    next();
    expect(Tok::lparen, "'('");
    AgentId actor = agent(next());
    expect(Tok::comma, "','");
    ActionType type;
    if (t.text == "tell+" || t.text == "tell-") {
      Formula content = parse_iff();
      type = t.text == "tell+" ? ActionType::tell_plus(actor, content) : ActionType::tell_minus(actor, content);
    } else {
      std::vector<Literal> lits{literal()};
      while (accept(Tok::amp)) lits.push_back(literal());
      type = t.text == "show+" ? ActionType::show_plus(actor, lits) : ActionType::show_minus(actor, lits);
    }
    expect(Tok::rparen, "')'");
    try {
      return expand(type, sig_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Signature& sig_;
  const ActionRegistry& actions_;
};

}  // namespace

Formula parse(std::string_view text, const Signature& sig, const ActionRegistry& actions) {
  return Parser(text, sig, actions).formula_only();
}

PointedAction parse_action(std::string_view text, const Signature& sig, const ActionRegistry& actions) {
  return Parser(text, sig, actions).action_only();
}

Atom parse_atom(std::string_view text, const Signature& sig) { return Parser(text, sig, {}).atom_only(); }

}  // namespace dlm
