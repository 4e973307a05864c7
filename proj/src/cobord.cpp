#include "hss/cobord.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hss {

namespace {

WordPtr gen_node(Gen g) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Generator;
  w->gen = g;
  return w;
}

}  // namespace

WordPtr make_gen(Gen g) { return gen_node(g); }

WordPtr make_twist(std::vector<long> residues) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Generator;
  w->gen = Gen::Twist;
  w->twist_residues = std::move(residues);
  return w;
}

WordPtr make_swap(Signature a, Signature b) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Generator;
  w->gen = Gen::Swap;
  w->sig_a = std::move(a);
  w->sig_b = std::move(b);
  return w;
}

WordPtr make_id(Signature a) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Generator;
  w->gen = Gen::Id;
  w->sig_a = std::move(a);
  return w;
}

WordPtr make_compose(WordPtr pipeline_first, WordPtr then) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Compose;
  w->lhs = std::move(pipeline_first);
  w->rhs = std::move(then);
  return w;
}

WordPtr make_tensor(WordPtr left, WordPtr right) {
  auto w = std::make_shared<Word>();
  w->kind = Word::Kind::Tensor;
  w->lhs = std::move(left);
  w->rhs = std::move(right);
  return w;
}

std::string to_string(const WordPtr& word) {
  switch (word->kind) {
    case Word::Kind::Compose:
      return to_string(word->lhs) + " ; " + to_string(word->rhs);
    case Word::Kind::Tensor: {
      auto wrap = [](const WordPtr& w) {
        std::string s = to_string(w);
        return w->kind == Word::Kind::Compose ? "(" + s + ")" : s;
      };
      return wrap(word->lhs) + " * " + wrap(word->rhs);
    }
    case Word::Kind::Generator:
      break;
  }
  switch (word->gen) {
    case Gen::Pants: return "pants";
    case Gen::Copants: return "copants";
    case Gen::Unit: return "unit";
    case Gen::Counit: return "counit";
    case Gen::Form: return "form";
    case Gen::Coform: return "coform";
    case Gen::Eta: return "eta";
    case Gen::Eps: return "eps";
    case Gen::Flip: return "flip";
    case Gen::Unflip: return "unflip";
    case Gen::Swap:
      return "swap(" + word->sig_a + "," + word->sig_b + ")";
    case Gen::Id: return "id(" + word->sig_a + ")";
    case Gen::Twist: {
      std::ostringstream os;
      os << "twist([";
      for (std::size_t i = 0; i < word->twist_residues.size(); ++i)
        os << (i ? "," : "") << word->twist_residues[i];
      os << "])";
      return os.str();
    }
  }
  return "?";
}

namespace {

WordPtr at_position(const WordPtr& w, std::size_t pos) {
  auto copy = std::make_shared<Word>(*w);
  copy->pos = pos;
  return copy;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  WordPtr run() {
    WordPtr w = expr();
    skip_space();
    if (pos_ < text_.size())
      fail(Err::SyntaxError, at() + "unexpected '" +
                                 std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  std::string at() const {
    return "position " + std::to_string(pos_) + ": ";
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      fail(Err::SyntaxError,
           at() + "expected '" + std::string(1, c) + "'" +
               (pos_ < text_.size()
                    ? ", found '" + std::string(1, text_[pos_]) + "'"
                    : ", found end of input"));
  }

  WordPtr expr() {
    WordPtr w = term();
    while (eat(';')) w = make_compose(w, term());
    return w;
  }

  WordPtr term() {
    WordPtr w = factor();
    while (eat('*')) w = make_tensor(w, factor());
    return w;
  }

  WordPtr factor() {
    skip_space();
    if (eat('(')) {
      WordPtr w = expr();
      expect(')');
      return w;
    }
    if (pos_ >= text_.size())
      fail(Err::SyntaxError, at() + "expected a generator, found end of input");
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail(Err::SyntaxError, at() + "expected a generator, found '" +
                                 std::string(1, text_[pos_]) + "'");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);

    static const std::map<std::string, Gen> plain = {
        {"pants", Gen::Pants},   {"copants", Gen::Copants},
        {"unit", Gen::Unit},     {"counit", Gen::Counit},
        {"form", Gen::Form},     {"coform", Gen::Coform},
        {"eta", Gen::Eta},       {"eps", Gen::Eps},
        {"flip", Gen::Flip},     {"unflip", Gen::Unflip},
    };
    if (auto it = plain.find(name); it != plain.end())
      return at_position(gen_node(it->second), start);
    if (name == "twist") {
      expect('(');
      expect('[');
      std::vector<long> residues;
      skip_space();
      if (!eat(']')) {
        residues.push_back(integer());
        while (eat(',')) residues.push_back(integer());
        expect(']');
      }
      expect(')');
      return at_position(make_twist(std::move(residues)), start);
    }
    if (name == "swap") {
      expect('(');
      Signature a = orientations();
      expect(',');
      Signature b = orientations();
      expect(')');
      return at_position(make_swap(std::move(a), std::move(b)), start);
    }
    if (name == "id") {
      expect('(');
      Signature a = orientations();
      expect(')');
      return at_position(make_id(std::move(a)), start);
    }
    fail(Err::UnknownGenerator,
         "position " + std::to_string(start) + ": unknown generator '" +
             name + "'");
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      fail(Err::SyntaxError, "position " + std::to_string(start) +
                                 ": expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Signature orientations() {
    skip_space();
    Signature s;
    while (pos_ < text_.size() &&
           (text_[pos_] == '+' || text_[pos_] == '-')) {
      s.push_back(text_[pos_]);
      ++pos_;
    }
    return s;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

WordPtr parse(const std::string& text) { return Parser(text).run(); }

std::pair<Signature, Signature> typecheck(const WordPtr& word) {
  switch (word->kind) {
    case Word::Kind::Compose: {
      auto [dl, cl] = typecheck(word->lhs);
      auto [dr, cr] = typecheck(word->rhs);
      if (cl != dr)
        fail(Err::TypeMismatch,
             "cannot compose '" + to_string(word->lhs) + "' into '" +
                 to_string(word->rhs) + "': codomain '" + cl +
                 "' does not match domain '" + dr + "'");
      return {dl, cr};
    }
    case Word::Kind::Tensor: {
      auto [dl, cl] = typecheck(word->lhs);
      auto [dr, cr] = typecheck(word->rhs);
      return {dl + dr, cl + cr};
    }
    case Word::Kind::Generator:
      break;
  }
  switch (word->gen) {
    case Gen::Pants: return {"++", "+"};
    case Gen::Copants: return {"+", "++"};
    case Gen::Unit: return {"", "+"};
    case Gen::Counit: return {"+", ""};
    case Gen::Form: return {"++", ""};
    case Gen::Coform: return {"", "++"};
    case Gen::Eta: return {"", "+-"};
    case Gen::Eps: return {"-+", ""};
    case Gen::Flip: return {"+", "-"};
    case Gen::Unflip: return {"-", "+"};
    case Gen::Twist: return {"+", "+"};
    case Gen::Swap: return {word->sig_a + word->sig_b,
                            word->sig_b + word->sig_a};
    case Gen::Id: return {word->sig_a, word->sig_a};
  }
  fail(Err::TypeMismatch, "unreachable generator kind");
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::Index dim_pow(std::size_t d, std::size_t n) {
  Eigen::Index out = 1;
  for (std::size_t i = 0; i < n; ++i)
    out *= static_cast<Eigen::Index>(d);
  return out;
}

/// The averaging map pi(x) = sum_{m,n} g^{mn} e_m x e_n, as a matrix in the
/// algebra basis. It is the cylinder of the state sum: identity on the
/// center, and exactly the correction that keeps handles built from
/// copants;pants consistent with the triangulated handle.
Matrix averaging_matrix(const Algebra& alg) {
  const auto d = static_cast<Eigen::Index>(alg.dim());
  const Matrix& ginv = alg.inv_metric();
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Vector ei = Vector::Zero(d);
    ei(i) = 1.0;
    for (Eigen::Index m = 0; m < d; ++m) {
      Vector em = Vector::Zero(d);
      em(m) = 1.0;
      Vector left = alg.multiply(em, ei);
      for (Eigen::Index n = 0; n < d; ++n) {
        if (ginv(m, n) == cplx(0.0)) continue;
        Vector en = Vector::Zero(d);
        en(n) = 1.0;
        out.col(i) += ginv(m, n) * alg.multiply(left, en);
      }
    }
  }
  return out;
}

Matrix generator_matrix(const Word& w, const Algebra& alg,
                        const GAction& action) {
  const std::size_t d = alg.dim();
  const auto di = static_cast<Eigen::Index>(d);
  switch (w.gen) {
    case Gen::Pants: {
      Matrix m = Matrix::Zero(di, di * di);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            m(static_cast<Eigen::Index>(k),
              static_cast<Eigen::Index>(i * d + j)) = alg.c(i, j, k);
      return m;
    }
    case Gen::Copants: {
      // Metric adjoint of pants, with the averaging map on the first output
      // leg: delta[(i,j)][k] = sum_{m,n} g^{im} g^{jn} C_mnk.
      const Matrix& ginv = alg.inv_metric();
      Matrix delta = Matrix::Zero(di * di, di);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            cplx v = 0;
            for (std::size_t m = 0; m < d; ++m)
              for (std::size_t n = 0; n < d; ++n)
                v += ginv(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(m)) *
                     ginv(static_cast<Eigen::Index>(j),
                          static_cast<Eigen::Index>(n)) *
                     alg.lowered(m, n, k);
            delta(static_cast<Eigen::Index>(i * d + j),
                  static_cast<Eigen::Index>(k)) = v;
          }
      return kron(averaging_matrix(alg), Matrix::Identity(di, di)) * delta;
    }
    case Gen::Unit:
      return alg.unit();
    case Gen::Counit:
      return (alg.metric() * alg.unit()).transpose();
    case Gen::Form: {
      Matrix m(1, di * di);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          m(0, static_cast<Eigen::Index>(i * d + j)) =
              alg.metric()(static_cast<Eigen::Index>(i),
                           static_cast<Eigen::Index>(j));
      return m;
    }
    case Gen::Coform: {
      Matrix m(di * di, 1);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          m(static_cast<Eigen::Index>(i * d + j), 0) =
              alg.inv_metric()(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(j));
      return m;
    }
    case Gen::Eta: {
      Matrix m = Matrix::Zero(di * di, 1);
      for (std::size_t i = 0; i < d; ++i)
        m(static_cast<Eigen::Index>(i * d + i), 0) = 1.0;
      return m;
    }
    case Gen::Eps: {
      Matrix m = Matrix::Zero(1, di * di);
      for (std::size_t i = 0; i < d; ++i)
        m(0, static_cast<Eigen::Index>(i * d + i)) = 1.0;
      return m;
    }
    case Gen::Flip:
      return alg.metric();
    case Gen::Unflip:
      return alg.inv_metric();
    case Gen::Twist: {
      GroupElement g{w.twist_residues};
      return alg.left_mult_matrix(action.image(g));
    }
    case Gen::Swap: {
      const Eigen::Index da = dim_pow(d, w.sig_a.size());
      const Eigen::Index db = dim_pow(d, w.sig_b.size());
      Matrix m = Matrix::Zero(da * db, da * db);
      for (Eigen::Index x = 0; x < da; ++x)
        for (Eigen::Index y = 0; y < db; ++y)
          m(y * da + x, x * db + y) = 1.0;
      return m;
    }
    case Gen::Id:
      return Matrix::Identity(dim_pow(d, w.sig_a.size()),
                              dim_pow(d, w.sig_a.size()));
  }
  fail(Err::TypeMismatch, "unreachable generator kind");
}

Matrix evaluate_rec(const WordPtr& word, const Algebra& alg,
                    const GAction& action) {
  switch (word->kind) {
    case Word::Kind::Compose:
      return evaluate_rec(word->rhs, alg, action) *
             evaluate_rec(word->lhs, alg, action);
    case Word::Kind::Tensor:
      return kron(evaluate_rec(word->lhs, alg, action),
                  evaluate_rec(word->rhs, alg, action));
    case Word::Kind::Generator:
      return generator_matrix(*word, alg, action);
  }
  fail(Err::TypeMismatch, "unreachable word kind");
}

}  // namespace

Matrix evaluate_word(const WordPtr& word, const Algebra& alg,
                     const GAction& action) {
  typecheck(word);  // reject ill-typed words before touching matrices
  return evaluate_rec(word, alg, action);
}

WordPtr closed_genus_word(int h, const GroupElement& g) {
  if (h < 0)
    fail(Err::NegativeGenus,
         "genus " + std::to_string(h) + " is negative");
  WordPtr w = make_gen(Gen::Unit);
  for (int i = 0; i < h; ++i)
    w = make_compose(make_compose(w, make_gen(Gen::Copants)),
                     make_gen(Gen::Pants));
  w = make_compose(w, make_twist(g.residues));
  return make_compose(w, make_gen(Gen::Counit));
}

}  // namespace hss
