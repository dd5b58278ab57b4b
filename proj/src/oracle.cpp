#include "bbgroup/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "bbgroup/error.hpp"

namespace bbgroup {

namespace {

std::atomic<std::uint32_t> next_backend_id{1};

std::string trimmed(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::uint32_t json_uint(const nlohmann::json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw Error(ErrorKind::InvalidSpec,
                "expected a nonnegative integer, got " + j.dump());
  return j.get<std::uint32_t>();
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidSpec,
                "cannot parse element '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// permutations

PermutationBackend::PermutationBackend(std::uint32_t degree) : degree_(degree) {
  if (degree == 0 || degree > 0xFFFF)
    throw Error(ErrorKind::InvalidSpec, "permutation degree out of range");
}

Payload PermutationBackend::identity() const {
  Payload id(degree_);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  return id;
}

void PermutationBackend::multiply(PayloadView a, PayloadView b,
                                  Payload& out) const {
  out.resize(degree_);
  for (std::uint32_t p = 0; p < degree_; ++p) out[p] = b[a[p]];
}

Payload PermutationBackend::invert(PayloadView a) const {
  Payload out(degree_);
  for (std::uint32_t p = 0; p < degree_; ++p) out[a[p]] = static_cast<std::uint16_t>(p);
  return out;
}

std::string PermutationBackend::format(PayloadView a) const {
  std::string out;
  std::vector<bool> seen(degree_, false);
  for (std::uint32_t start = 0; start < degree_; ++start) {
    if (seen[start] || a[start] == start) continue;
    out += '(';
    std::uint32_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = a[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Payload PermutationBackend::from_cycles(
    const std::vector<std::vector<std::uint32_t>>& cycles) const {
  Payload perm = identity();
  for (const auto& cycle : cycles) {
    // compose cycles left to right
    Payload c = identity();
    std::unordered_set<std::uint32_t> used;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const std::uint32_t pt = cycle[j];
      if (pt == 0 || pt > degree_)
        throw Error(ErrorKind::InvalidSpec,
                    "cycle point " + std::to_string(pt) + " outside 1.." +
                        std::to_string(degree_));
      if (!used.insert(pt).second)
        throw Error(ErrorKind::InvalidSpec,
                    "point " + std::to_string(pt) + " repeated in a cycle");
      c[pt - 1] = static_cast<std::uint16_t>(cycle[(j + 1) % cycle.size()] - 1);
    }
    Payload next;
    multiply(perm, c, next);
    perm = std::move(next);
  }
  return perm;
}

Payload PermutationBackend::parse(std::string_view text) const {
  const std::string s = trimmed(text);
  if (s.empty() || s == "e" || s == "()") return identity();
  if (s.front() == '[') {
    const auto j = parse_json(s);
    if (!j.is_array())
      throw Error(ErrorKind::InvalidSpec, "permutation must be a list of cycles");
    std::vector<std::vector<std::uint32_t>> cycles;
    for (const auto& cyc : j) {
      if (!cyc.is_array())
        throw Error(ErrorKind::InvalidSpec, "cycle must be a list of points");
      auto& c = cycles.emplace_back();
      for (const auto& pt : cyc) c.push_back(json_uint(pt));
    }
    return from_cycles(cycles);
  }
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(')
      throw Error(ErrorKind::InvalidSpec, "bad cycle notation: " + s);
    const auto close = s.find(')', i);
    if (close == std::string::npos)
      throw Error(ErrorKind::InvalidSpec, "unterminated cycle: " + s);
    std::string body = s.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    auto& c = cycles.emplace_back();
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](unsigned char d) { return std::isdigit(d); }))
        throw Error(ErrorKind::InvalidSpec, "bad point '" + tok + "' in " + s);
      c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    i = close + 1;
  }
  return from_cycles(cycles);
}

// ---------------------------------------------------------------------------
// Moebius construction

MoebiusBackend::MoebiusBackend(std::uint32_t n, std::vector<std::uint32_t> poly)
    : PermutationBackend((n >= 2 && n <= 15) ? (1u << n) + 1 : 1),
      n_(n),
      field_(FieldSpec{2, n, std::move(poly)}) {
  if (n < 2 || n > 15)
    throw Error(ErrorKind::InvalidSpec, "moebius backend needs 2 <= n <= 15");
}

std::uint32_t MoebiusBackend::point_index(std::uint32_t value) const {
  if (value == kInfinity) return 0;
  if (value == 0) return 1;
  const std::uint32_t q = field_.order();
  const std::uint32_t l = field_.log(static_cast<GaloisField::Value>(value));
  return 1 + (l == 0 ? q - 1 : l);
}

std::uint32_t MoebiusBackend::point_value(std::uint32_t index) const {
  if (index == 0) return kInfinity;
  if (index == 1) return 0;
  return field_.exp(index - 1);
}

Payload MoebiusBackend::moebius_map(GaloisField::Value a, GaloisField::Value b,
                                    GaloisField::Value c,
                                    GaloisField::Value d) const {
  const auto& f = field_;
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
    throw Error(ErrorKind::InvalidSpec, "moebius map with ad - bc = 0");
  Payload out(degree());
  for (std::uint32_t idx = 0; idx < degree(); ++idx) {
    const std::uint32_t z = point_value(idx);
    std::uint32_t image;
    if (z == kInfinity) {
      image = (c == 0) ? kInfinity : f.mul(a, f.inv(c));
    } else {
      const auto zv = static_cast<GaloisField::Value>(z);
      const auto num = f.add(f.mul(a, zv), b);
      const auto den = f.add(f.mul(c, zv), d);
      image = (den == 0) ? kInfinity : f.mul(num, f.inv(den));
    }
    out[idx] = static_cast<std::uint16_t>(point_index(image));
  }
  return out;
}

std::vector<Payload> MoebiusBackend::standard_generators() const {
  const auto lambda = field_.primitive();
  return {moebius_map(1, 1, 0, 1), moebius_map(lambda, 0, 0, 1),
          moebius_map(0, 1, 1, 0)};
}

std::vector<std::string> MoebiusBackend::point_labels() const {
  std::vector<std::string> labels{"inf", "0"};
  for (std::uint32_t j = 1; j + 2 <= degree(); ++j)
    labels.push_back("l^" + std::to_string(j));
  return labels;
}

// ---------------------------------------------------------------------------
// matrices over GF(p^k)

MatrixBackend::MatrixBackend(GaloisField field, std::uint32_t dim)
    : field_(std::move(field)), dim_(dim) {
  if (dim == 0 || dim > 64)
    throw Error(ErrorKind::InvalidSpec, "matrix dimension out of range");
}

Payload MatrixBackend::identity() const {
  Payload id(static_cast<std::size_t>(dim_) * dim_, 0);
  for (std::uint32_t i = 0; i < dim_; ++i) id[i * dim_ + i] = 1;
  return id;
}

void MatrixBackend::multiply(PayloadView a, PayloadView b, Payload& out) const {
  const std::uint32_t n = dim_;
  out.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        out[i * n + j] = field_.add(out[i * n + j], field_.mul(aik, b[k * n + j]));
    }
}

Payload MatrixBackend::invert(PayloadView a) const {
  const std::uint32_t n = dim_;
  Payload m(a.begin(), a.end());
  Payload out = identity();
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Precondition, "singular matrix");
    for (std::uint32_t j = 0; j < n; ++j) {
      std::swap(m[col * n + j], m[pivot * n + j]);
      std::swap(out[col * n + j], out[pivot * n + j]);
    }
    const auto s = field_.inv(m[col * n + col]);
    for (std::uint32_t j = 0; j < n; ++j) {
      m[col * n + j] = field_.mul(m[col * n + j], s);
      out[col * n + j] = field_.mul(out[col * n + j], s);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const auto f = m[r * n + col];
      for (std::uint32_t j = 0; j < n; ++j) {
        m[r * n + j] = field_.sub(m[r * n + j], field_.mul(f, m[col * n + j]));
        out[r * n + j] = field_.sub(out[r * n + j], field_.mul(f, out[col * n + j]));
      }
    }
  }
  return out;
}

GaloisField::Value MatrixBackend::determinant(PayloadView a) const {
  const std::uint32_t n = dim_;
  Payload m(a.begin(), a.end());
  GaloisField::Value det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(m[col * n + j], m[pivot * n + j]);
      det = field_.neg(det);
    }
    det = field_.mul(det, m[col * n + col]);
    const auto s = field_.inv(m[col * n + col]);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      if (m[r * n + col] == 0) continue;
      const auto f = field_.mul(m[r * n + col], s);
      for (std::uint32_t j = col; j < n; ++j)
        m[r * n + j] = field_.sub(m[r * n + j], field_.mul(f, m[col * n + j]));
    }
  }
  return det;
}

std::string MatrixBackend::format(PayloadView a) const {
  std::string out = "[";
  for (std::uint32_t i = 0; i < dim_; ++i) {
    out += i ? ",[" : "[";
    for (std::uint32_t j = 0; j < dim_; ++j) {
      if (j) out += ',';
      out += std::to_string(a[i * dim_ + j]);
    }
    out += ']';
  }
  return out + "]";
}

Payload MatrixBackend::from_entries(const std::vector<std::uint32_t>& entries) const {
  if (entries.size() != static_cast<std::size_t>(dim_) * dim_)
    throw Error(ErrorKind::InvalidSpec,
                "matrix needs " + std::to_string(dim_ * dim_) + " entries");
  Payload out;
  out.reserve(entries.size());
  for (auto v : entries) {
    if (!field_.contains(v))
      throw Error(ErrorKind::InvalidSpec,
                  "field index " + std::to_string(v) + " out of range");
    out.push_back(static_cast<std::uint16_t>(v));
  }
  return out;
}

Payload MatrixBackend::parse(std::string_view text) const {
  const std::string s = trimmed(text);
  if (s == "e") return identity();
  const auto j = parse_json(s);
  if (!j.is_array()) throw Error(ErrorKind::InvalidSpec, "matrix must be an array");
  std::vector<std::uint32_t> entries;
  for (const auto& row : j) {
    if (row.is_array()) {
      if (row.size() != dim_)
        throw Error(ErrorKind::InvalidSpec, "matrix row has wrong length");
      for (const auto& v : row) entries.push_back(json_uint(v));
    } else {
      entries.push_back(json_uint(row));
    }
  }
  return from_entries(entries);
}

// ---------------------------------------------------------------------------
// the oracle

GroupOracle::GroupOracle(std::shared_ptr<const Backend> backend,
                         std::vector<Payload> generators,
                         std::optional<std::uint64_t> exponent, std::size_t cap)
    : backend_(std::move(backend)), id_(next_backend_id.fetch_add(1)) {
  if (!backend_) throw Error(ErrorKind::InvalidSpec, "null backend");
  if (generators.empty())
    throw Error(ErrorKind::InvalidSpec, "generator list is empty");
  identity_ = Element{id_, backend_->identity()};
  for (auto& g : generators) {
    if (g.size() != identity_.payload.size())
      throw Error(ErrorKind::InvalidSpec, "generator has wrong payload size");
    generators_.push_back(Element{id_, std::move(g)});
  }

  if (exponent) {
    if (*exponent == 0) throw Error(ErrorKind::InvalidSpec, "exponent must be positive");
    exponent_ = *exponent;
  } else {
    const Enumeration all = enumerate(*this, cap);
    std::uint64_t e = 1;
    for (const auto& x : all.elements()) {
      std::uint64_t order = 1;
      for (Element y = x; !is_identity(y); y = mul(y, x)) ++order;
      e = std::lcm(e, order);
    }
    exponent_ = e;
  }

  for (const auto& g : generators_) {
    // square and multiply without going through powertools
    Element acc = identity_, base = g;
    for (std::uint64_t k = exponent_; k; k >>= 1) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
    }
    if (!is_identity(acc))
      throw Error(ErrorKind::ExponentContract,
                  "generator " + format(g) + " does not satisfy g^E = 1 for E = " +
                      std::to_string(exponent_));
  }
  reset_mult_count();
}

void GroupOracle::check(const Element& a) const {
  if (a.backend_id != id_)
    throw Error(ErrorKind::BackendMismatch,
                "element from backend " + std::to_string(a.backend_id) +
                    " used with backend " + std::to_string(id_));
}

Element GroupOracle::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  mult_count_.fetch_add(1, std::memory_order_relaxed);
  Element out{id_, {}};
  backend_->multiply(a.payload, b.payload, out.payload);
  return out;
}

Element GroupOracle::inv(const Element& a) const {
  check(a);
  return Element{id_, backend_->invert(a.payload)};
}

bool GroupOracle::is_identity(const Element& a) const {
  check(a);
  return a.payload == identity_.payload;
}

Element GroupOracle::conjugate(const Element& x, const Element& g) const {
  return mul(mul(inv(g), x), g);
}

bool GroupOracle::commute(const Element& a, const Element& b) const {
  return mul(a, b) == mul(b, a);
}

Element GroupOracle::make(Payload payload) const {
  if (payload.size() != identity_.payload.size())
    throw Error(ErrorKind::InvalidSpec, "payload has wrong size");
  return Element{id_, std::move(payload)};
}

Element GroupOracle::parse(std::string_view text) const {
  return Element{id_, backend_->parse(text)};
}

std::string GroupOracle::format(const Element& a) const {
  check(a);
  return backend_->format(a.payload);
}

// ---------------------------------------------------------------------------
// construction helpers

std::shared_ptr<GroupOracle> build_backend(const BackendSpec& spec, std::size_t cap) {
  switch (spec.kind) {
    case BackendSpec::Kind::Perm: {
      auto backend = std::make_shared<PermutationBackend>(spec.degree);
      std::vector<Payload> gens;
      for (const auto& cycles : spec.perm_generators)
        gens.push_back(backend->from_cycles(cycles));
      return std::make_shared<GroupOracle>(backend, std::move(gens), spec.exponent, cap);
    }
    case BackendSpec::Kind::Matrix: {
      auto backend = std::make_shared<MatrixBackend>(GaloisField(spec.field), spec.dim);
      std::vector<Payload> gens;
      for (const auto& entries : spec.matrix_generators) {
        auto g = backend->from_entries(entries);
        if (backend->determinant(g) == 0)
          throw Error(ErrorKind::InvalidSpec,
                      "generator " + backend->format(g) + " has determinant zero");
        gens.push_back(std::move(g));
      }
      return std::make_shared<GroupOracle>(backend, std::move(gens), spec.exponent, cap);
    }
    case BackendSpec::Kind::Moebius: {
      auto backend = std::make_shared<MoebiusBackend>(spec.n, spec.field.poly);
      std::vector<Payload> gens = backend->standard_generators();
      for (const auto& cycles : spec.perm_generators)
        gens.push_back(backend->from_cycles(cycles));
      return std::make_shared<GroupOracle>(backend, std::move(gens), spec.exponent, cap);
    }
  }
  throw Error(ErrorKind::InvalidSpec, "unknown backend kind");
}

std::shared_ptr<GroupOracle> make_perm_group(
    std::uint32_t degree,
    const std::vector<std::vector<std::vector<std::uint32_t>>>& generators,
    std::optional<std::uint64_t> exponent) {
  BackendSpec spec;
  spec.kind = BackendSpec::Kind::Perm;
  spec.degree = degree;
  spec.perm_generators = generators;
  spec.exponent = exponent;
  return build_backend(spec);
}

std::shared_ptr<GroupOracle> make_moebius_group(std::uint32_t n) {
  BackendSpec spec;
  spec.kind = BackendSpec::Kind::Moebius;
  spec.n = n;
  return build_backend(spec);
}

// ---------------------------------------------------------------------------
// enumeration

Enumeration::Enumeration(std::vector<Element> sorted_elements)
    : elements_(std::move(sorted_elements)) {}

std::optional<std::size_t> Enumeration::index_of(const Element& e) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Enumeration subgroup_closure(const GroupOracle& oracle,
                             std::span<const Element> generators, std::size_t cap) {
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> frontier;
  const Element e = oracle.identity();
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    const Element x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Element y = oracle.mul(x, g);
      if (seen.contains(y)) continue;
      if (seen.size() >= cap)
        throw Error(ErrorKind::CapExceeded,
                    "enumeration exceeded cap of " + std::to_string(cap) + " elements");
      seen.insert(y);
      frontier.push_back(std::move(y));
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return Enumeration(std::move(out));
}

Enumeration enumerate(const GroupOracle& oracle, std::size_t cap) {
  return subgroup_closure(oracle, oracle.generators(), cap);
}

}  // namespace bbgroup
