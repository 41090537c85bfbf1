#include "modcube/modlang.hpp"

#include <cctype>

#include "modcube/error.hpp"

namespace modcube {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::AxisNotPresent: return "axis-not-present";
    case ErrorKind::AxisAlreadyPresent: return "axis-already-present";
    case ErrorKind::NotComposable: return "not-composable";
    case ErrorKind::ModeMismatch: return "mode-mismatch";
    case ErrorKind::OrderingViolation: return "ordering-violation";
    case ErrorKind::NonSymmetricMode: return "non-symmetric-mode";
    case ErrorKind::TranspositionOutOfRange: return "transposition-out-of-range";
    case ErrorKind::ChainMismatch: return "chain-mismatch";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::ArityViolation: return "arity-violation";
    case ErrorKind::UnknownWorld: return "unknown-world";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

ModIndex ModIndex::then(const ModIndex& rhs) const {
  std::vector<Atom> out = atoms_;
  out.insert(out.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  return ModIndex(std::move(out));
}

std::optional<Atom> ModIndex::max_atom() const {
  if (atoms_.empty()) return std::nullopt;
  Atom m = atoms_.front();
  for (Atom a : atoms_) m = std::max(m, a);
  return m;
}

namespace {

void flatten(const IndexTree& t, std::vector<Atom>& out) {
  if (const auto* leaf = std::get_if<IndexTree::Leaf>(&t.node)) {
    out.push_back(leaf->atom);
  } else if (const auto* seq = std::get_if<IndexTree::Seq>(&t.node)) {
    for (const auto& part : seq->parts) flatten(part, out);
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<unsigned> arity)
      : text_(text), arity_(arity) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  IndexTree index() {
    std::vector<IndexTree> parts;
    parts.push_back(term());
    for (;;) {
      skip_ws();
      if (peek() == ';') {
        ++pos_;
        parts.push_back(term());
        continue;
      }
      reject_union();
      break;
    }
    if (parts.size() == 1) return std::move(parts.front());
    return IndexTree::seq(std::move(parts));
  }

  std::vector<RawOp> ops() {
    std::vector<RawOp> out;
    for (;;) {
      skip_ws();
      OpKind kind;
      if (match_word("box")) {
        kind = OpKind::Box;
      } else if (match_word("dia")) {
        kind = OpKind::Diamond;
      } else {
        break;
      }
      skip_ws();
      if (peek() != '_') fail("expected '_' after operator");
      ++pos_;
      out.push_back({kind, normalize_index(index())});
    }
    return out;
  }

  Formula formula() {
    auto raw = ops();
    skip_ws();
    if (peek() != 'A') fail("expected atom 'A'");
    ++pos_;
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_'))
      fail("only the propositional letter 'A' is supported");
    return Formula{expand_prefix(raw)};
  }

  bool match_arrow() {
    skip_ws();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

 private:
  IndexTree term() {
    skip_ws();
    reject_union();
    const char c = peek();
    if (c == '(' || c == '{') {
      const char close = c == '(' ? ')' : '}';
      ++pos_;
      IndexTree inner = index();
      skip_ws();
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
      return inner;
    }
    if (match_word("eps")) return IndexTree::eps();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      unsigned long value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (value > 1000000) throw ParseError(start, "index number too large");
        ++pos_;
      }
      if (arity_ && value >= *arity_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(value) + " at " +
                        std::to_string(start) + " is out of range for arity " +
                        std::to_string(*arity_));
      return IndexTree::leaf(static_cast<Atom>(value));
    }
    fail("expected index (atom, 'eps' or parenthesized index)");
  }

  void reject_union() {
    skip_ws();
    const std::string_view rest = text_.substr(pos_);
    if (rest.starts_with("\xE2\x88\xAA") || rest.starts_with("|") ||
        rest.starts_with("+") || rest.starts_with("cup") ||
        rest.starts_with("U"))
      fail("non-deterministic choice (union) is not supported in indices");
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    if (after < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[after])))
      return false;
    pos_ = after;
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::optional<unsigned> arity_;
  std::size_t pos_ = 0;
};

}  // namespace

ModIndex normalize_index(const IndexTree& tree) {
  std::vector<Atom> atoms;
  flatten(tree, atoms);
  return ModIndex(std::move(atoms));
}

ModalPrefix expand_prefix(const std::vector<RawOp>& ops) {
  ModalPrefix out;
  for (const auto& op : ops)
    for (Atom a : op.index) out.push_back({op.kind, a});
  return out;
}

ModIndex parse_index(std::string_view text, std::optional<unsigned> arity) {
  Parser p(text, arity);
  ModIndex idx = normalize_index(p.index());
  p.expect_end();
  return idx;
}

Formula parse_formula(std::string_view text, std::optional<unsigned> arity) {
  Parser p(text, arity);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

AxiomSentence parse_axiom(std::string_view text,
                          std::optional<unsigned> arity) {
  Parser p(text, arity);
  Formula lhs = p.formula();
  if (!p.match_arrow()) p.fail("expected '->'");
  Formula rhs = p.formula();
  p.expect_end();
  return {std::move(lhs), std::move(rhs)};
}

AnyTerm parse_any(std::string_view text, std::optional<unsigned> arity) {
  if (text.find("->") != std::string_view::npos) return parse_axiom(text, arity);
  if (text.find('A') != std::string_view::npos || text.find("box") != std::string_view::npos ||
      text.find("dia") != std::string_view::npos)
    return parse_formula(text, arity);
  return parse_index(text, arity);
}

std::string render(const ModIndex& idx) {
  if (idx.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(idx[i]);
  }
  return out;
}

std::string render_side(const ModIndex& idx) {
  if (idx.size() <= 1) return render(idx);
  return "(" + render(idx) + ")";
}

std::string render(const Letter& l) {
  return std::string(l.kind == OpKind::Box ? "box_" : "dia_") +
         std::to_string(l.atom);
}

std::string render(const Formula& f) {
  std::string out;
  for (const auto& l : f.prefix) {
    out += render(l);
    out += ' ';
  }
  out += 'A';
  return out;
}

std::string render(const AxiomSentence& ax) {
  return render(ax.lhs) + " -> " + render(ax.rhs);
}

std::string render(const AnyTerm& t) {
  return std::visit([](const auto& v) { return render(v); }, t);
}

}  // namespace modcube
