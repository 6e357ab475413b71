#include "polytrace/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "polytrace/rational.hpp"

namespace polytrace {

namespace {

formula_ptr make_node(formula_kind kind, formula_ptr lhs = nullptr,
                      formula_ptr rhs = nullptr, std::string name = {}) {
  return std::make_shared<formula>(
      formula{kind, std::move(name), std::move(lhs), std::move(rhs)});
}

struct token {
  enum class type { ident, bang, amp, pipe, arrow, lparen, rparen, end };
  type t;
  std::string text;  // ident only
  size_t pos;
};

class lexer {
 public:
  explicit lexer(const std::string& text) : text_(text) { advance(); }

  const token& peek() const { return current_; }

  token take() {
    token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    const size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {token::type::end, "", start};
      return;
    }
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      current_ = {token::type::bang, "", start};
    } else if (c == '&') {
      ++pos_;
      current_ = {token::type::amp, "", start};
    } else if (c == '|') {
      ++pos_;
      current_ = {token::type::pipe, "", start};
    } else if (c == '(') {
      ++pos_;
      current_ = {token::type::lparen, "", start};
    } else if (c == ')') {
      ++pos_;
      current_ = {token::type::rparen, "", start};
    } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      current_ = {token::type::arrow, "", start};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      current_ = {token::type::ident, text_.substr(pos_, end - pos_), start};
      pos_ = end;
    } else {
      throw input_error("formula parse error at offset " +
                        std::to_string(start) + ": unexpected character '" +
                        std::string(1, c) + "'");
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  token current_{token::type::end, "", 0};
};

class parser {
 public:
  explicit parser(const std::string& text) : lex_(text) {}

  formula_ptr parse() {
    formula_ptr f = parse_implication();
    const token& t = lex_.peek();
    if (t.t != token::type::end) {
      throw input_error("formula parse error at offset " +
                        std::to_string(t.pos) + ": unexpected trailing input");
    }
    return f;
  }

 private:
  // implication -> disjunction ('->' implication)?   right associative
  formula_ptr parse_implication() {
    formula_ptr lhs = parse_disjunction();
    if (lex_.peek().t == token::type::arrow) {
      lex_.take();
      return make_node(formula_kind::implication, lhs, parse_implication());
    }
    return lhs;
  }

  formula_ptr parse_disjunction() {
    formula_ptr lhs = parse_conjunction();
    while (lex_.peek().t == token::type::pipe) {
      lex_.take();
      lhs = make_node(formula_kind::disjunction, lhs, parse_conjunction());
    }
    return lhs;
  }

  formula_ptr parse_conjunction() {
    formula_ptr lhs = parse_until();
    while (lex_.peek().t == token::type::amp) {
      lex_.take();
      lhs = make_node(formula_kind::conjunction, lhs, parse_until());
    }
    return lhs;
  }

  // until -> unary ('U' until)?   right associative
  formula_ptr parse_until() {
    formula_ptr lhs = parse_unary();
    const token& t = lex_.peek();
    if (t.t == token::type::ident && t.text == "U") {
      lex_.take();
      return make_node(formula_kind::until, lhs, parse_until());
    }
    return lhs;
  }

  formula_ptr parse_unary() {
    const token& t = lex_.peek();
    switch (t.t) {
      case token::type::bang:
        lex_.take();
        return make_node(formula_kind::negation, parse_unary());
      case token::type::lparen: {
        lex_.take();
        formula_ptr inner = parse_implication();
        const token close = lex_.take();
        if (close.t != token::type::rparen) {
          throw input_error("formula parse error at offset " +
                            std::to_string(close.pos) +
                            ": expected ')'");
        }
        return inner;
      }
      case token::type::ident: {
        const token id = lex_.take();
        if (id.text == "G") {
          return make_node(formula_kind::always, parse_unary());
        }
        if (id.text == "F") {
          return make_node(formula_kind::eventually, parse_unary());
        }
        if (id.text == "U") {
          throw input_error("formula parse error at offset " +
                            std::to_string(id.pos) +
                            ": 'U' is an operator, not an atom");
        }
        if (id.text == "true") return make_node(formula_kind::tt);
        if (id.text == "false") return make_node(formula_kind::ff);
        return make_node(formula_kind::atom, nullptr, nullptr, id.text);
      }
      default:
        throw input_error("formula parse error at offset " +
                          std::to_string(t.pos) + ": expected a formula");
    }
  }

  lexer lex_;
};

int precedence(formula_kind k) {
  switch (k) {
    case formula_kind::implication:
      return 0;
    case formula_kind::disjunction:
      return 1;
    case formula_kind::conjunction:
      return 2;
    case formula_kind::until:
      return 3;
    default:
      return 4;  // unary operators and leaves
  }
}

void format_rec(const formula_ptr& f, int parent_prec, std::string& out) {
  const int prec = precedence(f->kind);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f->kind) {
    case formula_kind::tt:
      out += "true";
      break;
    case formula_kind::ff:
      out += "false";
      break;
    case formula_kind::atom:
      out += f->atom_name;
      break;
    case formula_kind::negation:
      out += '!';
      format_rec(f->lhs, 4, out);
      break;
    case formula_kind::always:
      out += "G ";
      format_rec(f->lhs, 4, out);
      break;
    case formula_kind::eventually:
      out += "F ";
      format_rec(f->lhs, 4, out);
      break;
    case formula_kind::until:
      format_rec(f->lhs, prec + 1, out);
      out += " U ";
      format_rec(f->rhs, prec, out);  // right associative
      break;
    case formula_kind::conjunction:
      format_rec(f->lhs, prec, out);
      out += " & ";
      format_rec(f->rhs, prec + 1, out);
      break;
    case formula_kind::disjunction:
      format_rec(f->lhs, prec, out);
      out += " | ";
      format_rec(f->rhs, prec + 1, out);
      break;
    case formula_kind::implication:
      format_rec(f->lhs, prec + 1, out);
      out += " -> ";
      format_rec(f->rhs, prec, out);  // right associative
      break;
  }
  if (parens) out += ')';
}

// Truth values of an until/eventually/always subformula at every position.
// Until and eventually are least fixpoints: seed the wrap-around value with
// false, sweep the loop backwards, then sweep again seeded with the value
// the first sweep produced at the loop start. Always is the dual greatest
// fixpoint and seeds with true.
std::vector<char> fixpoint_pass(const std::vector<char>& a,
                                const std::vector<char>& b, size_t pre,
                                size_t loop, bool greatest) {
  const size_t n = pre + loop;
  std::vector<char> out(n, 0);
  const auto step = [&](size_t i, bool next) -> bool {
    if (greatest) return a[i] && next;   // always
    return b[i] || (a[i] && next);       // until
  };
  bool next = greatest;
  for (size_t pass = 0; pass < 2; ++pass) {
    for (size_t k = loop; k-- > 0;) {
      const size_t i = pre + k;
      out[i] = step(i, next) ? 1 : 0;
      next = out[i] != 0;
    }
    next = out[pre] != 0;  // wrap-around value for the second sweep
  }
  next = out[pre] != 0;
  for (size_t k = pre; k-- > 0;) {
    out[k] = step(k, next) ? 1 : 0;
    next = out[k] != 0;
  }
  return out;
}

std::vector<char> evaluate(const formula_ptr& f, const lasso_word& w,
                           const std::unordered_map<std::string, int>& atoms) {
  const size_t pre = w.prefix.size();
  const size_t loop = w.loop.size();
  const size_t n = pre + loop;
  switch (f->kind) {
    case formula_kind::tt:
      return std::vector<char>(n, 1);
    case formula_kind::ff:
      return std::vector<char>(n, 0);
    case formula_kind::atom: {
      const auto it = atoms.find(f->atom_name);
      if (it == atoms.end()) {
        throw input_error("formula names unknown region '" + f->atom_name +
                          "'");
      }
      std::vector<char> out(n);
      for (size_t i = 0; i < n; ++i) {
        const letter& l = w.at(i);
        out[i] =
            std::binary_search(l.begin(), l.end(), it->second) ? 1 : 0;
      }
      return out;
    }
    case formula_kind::negation: {
      std::vector<char> a = evaluate(f->lhs, w, atoms);
      for (char& v : a) v = v ? 0 : 1;
      return a;
    }
    case formula_kind::conjunction: {
      std::vector<char> a = evaluate(f->lhs, w, atoms);
      const std::vector<char> b = evaluate(f->rhs, w, atoms);
      for (size_t i = 0; i < n; ++i) a[i] = (a[i] && b[i]) ? 1 : 0;
      return a;
    }
    case formula_kind::disjunction: {
      std::vector<char> a = evaluate(f->lhs, w, atoms);
      const std::vector<char> b = evaluate(f->rhs, w, atoms);
      for (size_t i = 0; i < n; ++i) a[i] = (a[i] || b[i]) ? 1 : 0;
      return a;
    }
    case formula_kind::implication: {
      std::vector<char> a = evaluate(f->lhs, w, atoms);
      const std::vector<char> b = evaluate(f->rhs, w, atoms);
      for (size_t i = 0; i < n; ++i) a[i] = (!a[i] || b[i]) ? 1 : 0;
      return a;
    }
    case formula_kind::until: {
      const std::vector<char> a = evaluate(f->lhs, w, atoms);
      const std::vector<char> b = evaluate(f->rhs, w, atoms);
      return fixpoint_pass(a, b, pre, loop, /*greatest=*/false);
    }
    case formula_kind::eventually: {
      const std::vector<char> a(n, 1);
      const std::vector<char> b = evaluate(f->lhs, w, atoms);
      return fixpoint_pass(a, b, pre, loop, /*greatest=*/false);
    }
    case formula_kind::always: {
      const std::vector<char> a = evaluate(f->lhs, w, atoms);
      return fixpoint_pass(a, {}, pre, loop, /*greatest=*/true);
    }
  }
  throw internal_error("unhandled formula node");
}

}  // namespace

formula_ptr parse_formula(const std::string& text) {
  return parser(text).parse();
}

std::string format_formula(const formula_ptr& f) {
  std::string out;
  format_rec(f, 0, out);
  return out;
}

ltl_verdict lasso_check(const formula_ptr& f, const lasso_word& w,
                        const std::vector<std::string>& atom_names) {
  if (w.loop.empty()) throw input_error("lasso word has an empty loop");
  std::unordered_map<std::string, int> atoms;
  for (size_t i = 0; i < atom_names.size(); ++i) {
    atoms.emplace(atom_names[i], static_cast<int>(i));
  }
  ltl_verdict v;
  v.per_position = evaluate(f, w, atoms);
  v.satisfied = v.per_position[0] != 0;
  return v;
}

}  // namespace polytrace
