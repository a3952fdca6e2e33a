#include "orbitkit/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace orbitkit {

LieAlgebra::LieAlgebra(std::size_t dim,
                       std::vector<std::string> labels,
                       std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets,
                       std::map<std::string, Covector> named_covectors)
    : dim_(dim),
      labels_(std::move(labels)),
      brackets_(std::move(brackets)),
      covectors_(std::move(named_covectors)) {
  if (labels_.size() != dim_)
    throw std::invalid_argument("LieAlgebra: label count != dim");
  for (const auto& [key, val] : brackets_) {
    if (key.first >= key.second || key.second >= dim_ || val.size() != dim_)
      throw std::invalid_argument("LieAlgebra: malformed bracket table");
  }
  compute_nilpotency_();
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("unknown basis label '" + label + "'");
  return (std::size_t)(it - labels_.begin());
}

RatVec LieAlgebra::basis_vector(std::size_t i) const {
  RatVec v(dim_);
  v.at(i) = Rational(1);
  return v;
}

RatVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::invalid_argument("bracket_basis: index out of range");
  if (i == j) return RatVec(dim_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return RatVec(dim_);
  return flip ? scale(Rational(-1), it->second) : it->second;
}

RatVec LieAlgebra::bracket(const RatVec& u, const RatVec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  RatVec out(dim_);
  for (const auto& [key, cij] : brackets_) {
    auto [i, j] = key;
    Rational coeff = u[i] * v[j] - u[j] * v[i];
    if (coeff.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) out[k] += coeff * cij[k];
  }
  return out;
}

StructureReport LieAlgebra::structure_check() const {
  StructureReport rep;
  rep.antisymmetric = true; // implied by the sparse storage convention
  rep.jacobi = true;
  for (std::size_t i = 0; i < dim_ && rep.jacobi; ++i)
    for (std::size_t j = i + 1; j < dim_ && rep.jacobi; ++j)
      for (std::size_t k = j + 1; k < dim_ && rep.jacobi; ++k) {
        RatVec s = bracket(bracket_basis(i, j), basis_vector(k));
        s = add(s, bracket(bracket_basis(j, k), basis_vector(i)));
        s = add(s, bracket(bracket_basis(k, i), basis_vector(j)));
        if (!is_zero(s)) rep.jacobi = false;
      }
  rep.nilpotent_class = nilpotent_class_;
  return rep;
}

void LieAlgebra::compute_nilpotency_() {
  Subspace term = whole_algebra();
  int k = 0;
  while (true) {
    Subspace next = bracket_span(whole_algebra(), term);
    ++k;
    if (next.dim() == 0) { nilpotent_class_ = k; return; }
    if (next.dim() == term.dim()) { nilpotent_class_ = std::nullopt; return; }
    term = next;
  }
}

Covector LieAlgebra::coadjoint_vector(const RatVec& z, const Covector& x) const {
  if (z.size() != dim_ || x.size() != dim_)
    throw std::invalid_argument("coadjoint_vector: dimension mismatch");
  Covector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    out[i] = pair_with(x, bracket(basis_vector(i), z));
  return out;
}

Covector LieAlgebra::exp_coadjoint(const RatVec& z, const Covector& x) const {
  if (!nilpotent_class_)
    throw std::domain_error("exp_coadjoint: algebra is not nilpotent, series need not terminate");
  Covector acc = x;
  Covector term = x;
  for (std::int64_t n = 1; !is_zero(term); ++n) {
    if (n > (std::int64_t)dim_ + 1)
      throw std::logic_error("exp_coadjoint: series failed to terminate");
    term = scale(Rational(1, n), coadjoint_vector(z, term));
    acc = add(acc, term);
  }
  return acc;
}

Subspace LieAlgebra::perp_at(const Subspace& e, const Covector& x) const {
  if (e.side() != Side::algebra || e.ambient_dim() != dim_)
    throw std::invalid_argument("perp_at: e must live in the algebra");
  RatMat constraints;
  for (const auto& zrow : e.basis())
    constraints.push_back(coadjoint_vector(zrow, x));
  return Subspace(Side::algebra, dim_, nullspace(constraints, dim_));
}

Subspace LieAlgebra::whole_algebra() const {
  RatMat rows;
  for (std::size_t i = 0; i < dim_; ++i) rows.push_back(basis_vector(i));
  return Subspace(Side::algebra, dim_, std::move(rows));
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  RatMat rows;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      RatVec w = bracket(u, v);
      if (!is_zero(w)) rows.push_back(std::move(w));
    }
  return Subspace(Side::algebra, dim_, std::move(rows));
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  return s.contains(bracket_span(s, s));
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  return s.contains(bracket_span(whole_algebra(), s));
}

Subspace LieAlgebra::center() const {
  // v central iff sum_i v_i [e_i, e_j] = 0 for every j.
  RatMat constraints;
  for (std::size_t j = 0; j < dim_; ++j) {
    RatMat cols(dim_, RatVec(dim_)); // cols[k][i] = k-component of [e_i, e_j]
    for (std::size_t i = 0; i < dim_; ++i) {
      RatVec br = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k) cols[k][i] = br[k];
    }
    for (auto& row : cols)
      if (!is_zero(row)) constraints.push_back(std::move(row));
  }
  return Subspace(Side::algebra, dim_, nullspace(constraints, dim_));
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> series;
  Subspace term = bracket_span(whole_algebra(), whole_algebra());
  while (true) {
    series.push_back(term);
    if (term.dim() == 0) break;
    Subspace next = bracket_span(whole_algebra(), term);
    if (next.dim() == term.dim()) break;
    term = next;
  }
  return series;
}

std::vector<Subspace> LieAlgebra::ascending_central_series() const {
  std::vector<Subspace> series;
  Subspace z = center();
  while (true) {
    series.push_back(z);
    if (z.dim() == dim_) break;
    // next = {v : [v, e_j] in z for all j}; membership in z is qz = 0 for
    // each annihilator row q of z.
    RatMat ann = nullspace(z.basis(), dim_);
    RatMat constraints;
    for (std::size_t j = 0; j < dim_; ++j) {
      RatMat brackets_ij(dim_);
      for (std::size_t i = 0; i < dim_; ++i) brackets_ij[i] = bracket_basis(i, j);
      for (const auto& q : ann) {
        RatVec row(dim_);
        for (std::size_t i = 0; i < dim_; ++i) row[i] = dot(q, brackets_ij[i]);
        if (!is_zero(row)) constraints.push_back(std::move(row));
      }
    }
    Subspace next(Side::algebra, dim_, nullspace(constraints, dim_));
    if (next.dim() == z.dim()) break; // stationary below g (non-nilpotent)
    z = next;
  }
  return series;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Parses "q1*lk1 + q2*lk2 - lk3" into a coefficient vector on the basis.
RatVec parse_combination(const std::string& rhs,
                         const std::vector<std::string>& labels,
                         int line_no) {
  RatVec out(labels.size());
  std::string text = strip(rhs);
  if (text.empty()) throw ParseError(line_no, "empty bracket value");
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    Rational sign(1);
    while (pos < text.size() &&
           (std::isspace((unsigned char)text[pos]) || text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-' &&
           !std::isspace((unsigned char)text[pos]))
      ++pos;
    std::string term = text.substr(start, pos - start);
    Rational coeff = sign;
    std::string label = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      try {
        coeff = sign * Rational::parse(term.substr(0, star));
      } catch (const std::exception& e) {
        throw ParseError(line_no, std::string("bad coefficient: ") + e.what());
      }
      label = term.substr(star + 1);
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw ParseError(line_no, "unknown basis label '" + label + "'");
    out[(std::size_t)(it - labels.begin())] += coeff;
  }
  return out;
}

} // namespace

LieAlgebra LieAlgebra::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  bool labels_set = false;
  bool brackets_seen = false;
  std::map<std::pair<std::size_t, std::size_t>, RatVec> table;
  std::map<std::pair<std::size_t, std::size_t>, int> declared_at; // ordered pair -> line
  std::map<std::string, Covector> covectors;

  auto index_of_label = [&](const std::string& lbl) -> std::size_t {
    auto it = std::find(labels.begin(), labels.end(), lbl);
    if (it == labels.end())
      throw ParseError(line_no, "unknown basis label '" + lbl + "'");
    return (std::size_t)(it - labels.begin());
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    const std::string& kw = toks[0];

    if (kw == "dim") {
      if (dim) throw ParseError(line_no, "duplicate dim line");
      if (toks.size() != 2) throw ParseError(line_no, "expected: dim N");
      long n = 0;
      try { n = std::stol(toks[1]); } catch (...) { throw ParseError(line_no, "bad dimension"); }
      if (n <= 0) throw ParseError(line_no, "dimension must be positive");
      dim = (std::size_t)n;
      labels.clear();
      for (std::size_t i = 1; i <= *dim; ++i) labels.push_back("e" + std::to_string(i));
    } else if (kw == "basis") {
      if (!dim) throw ParseError(line_no, "basis line before dim");
      if (labels_set) throw ParseError(line_no, "duplicate basis line");
      if (brackets_seen) throw ParseError(line_no, "basis line after bracket lines");
      if (toks.size() != *dim + 1)
        throw ParseError(line_no, "expected " + std::to_string(*dim) + " basis labels");
      labels.assign(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
          if (labels[i] == labels[j])
            throw ParseError(line_no, "duplicate basis label '" + labels[i] + "'");
      labels_set = true;
    } else if (kw == "bracket") {
      if (!dim) throw ParseError(line_no, "bracket line before dim");
      brackets_seen = true;
      std::size_t arrow = line.find("->");
      if (arrow == std::string::npos) throw ParseError(line_no, "expected '->' in bracket line");
      std::vector<std::string> lhs = split_ws(line.substr(7, arrow - 7));
      if (lhs.size() != 2) throw ParseError(line_no, "expected: bracket li lj -> ...");
      std::size_t i = index_of_label(lhs[0]);
      std::size_t j = index_of_label(lhs[1]);
      RatVec value = parse_combination(line.substr(arrow + 2), labels, line_no);
      if (i == j) {
        if (!is_zero(value)) throw ParseError(line_no, "nonzero self-bracket violates antisymmetry");
        continue;
      }
      if (declared_at.count({i, j}))
        throw ParseError(line_no, "duplicate bracket for the same ordered pair (first at line " +
                                      std::to_string(declared_at[{i, j}]) + ")");
      declared_at[{i, j}] = line_no;
      std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
      RatVec canonical = i < j ? value : scale(Rational(-1), value);
      auto it = table.find(key);
      if (it != table.end()) {
        if (it->second != canonical)
          throw ParseError(line_no, "bracket contradicts an earlier declaration (antisymmetry)");
      } else {
        table[key] = std::move(canonical);
      }
    } else if (kw == "covector") {
      if (!dim) throw ParseError(line_no, "covector line before dim");
      if (toks.size() != *dim + 2)
        throw ParseError(line_no, "expected: covector name q1 ... q" + std::to_string(*dim));
      if (covectors.count(toks[1]))
        throw ParseError(line_no, "duplicate covector name '" + toks[1] + "'");
      Covector x(*dim);
      for (std::size_t k = 0; k < *dim; ++k) {
        try { x[k] = Rational::parse(toks[k + 2]); }
        catch (const std::exception& e) { throw ParseError(line_no, std::string("bad rational: ") + e.what()); }
      }
      covectors[toks[1]] = std::move(x);
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!dim) throw ParseError(line_no, "missing dim line");

  // Drop explicitly-declared zero brackets so storage holds nonzero values only.
  for (auto it = table.begin(); it != table.end();)
    it = is_zero(it->second) ? table.erase(it) : std::next(it);

  return LieAlgebra(*dim, std::move(labels), std::move(table), std::move(covectors));
}

LieAlgebra LieAlgebra::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open algebra file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

} // namespace orbitkit
