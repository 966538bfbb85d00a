#include "hsseq/free_algebra.hpp"

#include <cctype>
#include <sstream>

#include "hsseq/errors.hpp"

namespace hsseq {

NcPolynomial NcPolynomial::unit(const Field& f) {
  NcPolynomial p(f);
  p.add_term({}, Scalar::one(f));
  return p;
}

NcPolynomial NcPolynomial::generator(std::uint32_t i, const Field& f) {
  NcPolynomial p(f);
  p.add_term({i}, Scalar::one(f));
  return p;
}

void NcPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial r = a;
  if (r.terms_.empty()) r.field_ = b.field_;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial r = a;
  if (r.terms_.empty()) r.field_ = b.field_;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial r(a.field_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      NcPolynomial::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

NcPolynomial operator*(const Scalar& c, const NcPolynomial& p) {
  NcPolynomial r(p.field_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : p.terms_) r.terms_.emplace(w, c * cw);
  return r;
}

NcPolynomial bracket(const NcPolynomial& a, const NcPolynomial& b) {
  return a * b - b * a;
}

Scalar NcPolynomial::constant_term() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Scalar> NcPolynomial::linear_part(std::size_t num_generators) const {
  std::vector<Scalar> out(num_generators, Scalar::zero(field_));
  for (const auto& [w, c] : terms_)
    if (w.size() == 1) out[w[0]] = c;
  return out;
}

std::vector<NcPolynomial> NcPolynomial::left_normal_form(std::size_t num_generators) const {
  if (!constant_term().is_zero())
    throw Error("left normal form requires zero constant term");
  std::vector<NcPolynomial> out(num_generators, NcPolynomial(field_));
  for (const auto& [w, c] : terms_) {
    std::uint32_t last = w.back();
    Word prefix(w.begin(), w.end() - 1);
    out[last].add_term(prefix, c);
  }
  return out;
}

NcPolynomial NcPolynomial::apply_derivation(const std::vector<NcPolynomial>& images) const {
  NcPolynomial r(field_);
  for (const auto& [w, c] : terms_)
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const NcPolynomial& img = images[w[pos]];
      for (const auto& [wi, ci] : img.terms_) {
        Word nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), wi.begin(), wi.end());
        nw.insert(nw.end(), w.begin() + pos + 1, w.end());
        r.add_term(nw, c * ci);
      }
    }
  return r;
}

Matrix NcPolynomial::evaluate(const std::vector<Matrix>& gen_matrices, std::size_t dim) const {
  Matrix r(dim, dim, field_);
  for (const auto& [w, c] : terms_) {
    Matrix prod = Matrix::identity(dim, field_);
    for (std::uint32_t g : w) prod = prod * gen_matrices[g];
    r = r + c * prod;
  }
  return r;
}

std::string NcPolynomial::str(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << c.str();
    for (std::uint32_t g : w) os << "*" << (g < labels.size() ? labels[g] : "x" + std::to_string(g));
    first = false;
  }
  return os.str();
}

namespace {

/// Recursive-descent parser for Lie expressions.
class LieParser {
public:
  LieParser(const std::string& text, const std::vector<std::string>& labels, const Field& f)
      : text_(text), labels_(labels), field_(f) {}

  NcPolynomial parse() {
    NcPolynomial r = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' at offset " +
                       std::to_string(pos_) + " in '" + text_ + "'");
    return r;
  }

private:
  NcPolynomial parse_sum() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (get() == '-');
    NcPolynomial r = parse_term();
    if (negate) r = -r;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      NcPolynomial t = parse_term();
      r = (c == '-') ? r - t : r + t;
    }
    return r;
  }

  NcPolynomial parse_term() {
    skip_ws();
    Scalar coeff = Scalar::one(field_);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      saw_number = true;
      skip_ws();
      if (peek() == '*') {
        get();
      } else {
        // bare constant; only 0 is a Lie element
        if (!coeff.is_zero())
          throw ParseError("constant term '" + coeff.str() + "' is not allowed");
        return NcPolynomial::zero(field_);
      }
    }
    NcPolynomial atom = parse_atom();
    return saw_number ? coeff * atom : atom;
  }

  NcPolynomial parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '[') {
      get();
      NcPolynomial left = parse_sum();
      skip_ws();
      if (peek() != ',') throw ParseError("expected ',' in bracket of '" + text_ + "'");
      get();
      NcPolynomial right = parse_sum();
      skip_ws();
      if (peek() != ']') throw ParseError("expected ']' in '" + text_ + "'");
      get();
      return bracket(left, right);
    }
    if (c == '(') {
      get();
      NcPolynomial inner = parse_sum();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')' in '" + text_ + "'");
      get();
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_generator();
    throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + text_ + "'");
  }

  NcPolynomial parse_generator() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name)
        return NcPolynomial::generator(static_cast<std::uint32_t>(i), field_);
    throw ParseError("unknown generator '" + name + "' in '" + text_ + "'");
  }

  Scalar parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError("missing denominator in '" + text_ + "'");
      num += "/" + text_.substr(dstart, pos_ - dstart);
    }
    return Scalar::parse(num, field_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  const std::string& text_;
  const std::vector<std::string>& labels_;
  Field field_;
  std::size_t pos_ = 0;
};

} // namespace

NcPolynomial parse_lie_expression(const std::string& text,
                                  const std::vector<std::string>& generator_labels,
                                  const Field& f) {
  return LieParser(text, generator_labels, f).parse();
}

} // namespace hsseq
