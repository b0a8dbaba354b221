#include "chirality_lab/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n) {
  std::int64_t result = 1 % n;
  base = mod(base, n);
  while (e > 0) {
    if (e & 1) result = result * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return result;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Table from successor arrays for R and L given as maps on a finite set.
TablePtr table_from_maps(std::vector<Index> r, std::vector<Index> l) {
  auto invert = [](const std::vector<Index>& f) {
    std::vector<Index> inv(f.size(), CayleyTable::kNone);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= f.size() || inv[f[x]] != CayleyTable::kNone) throw ValidationError("generator is not a bijection");
      inv[f[x]] = static_cast<Index>(x);
    }
    return inv;
  };
  std::array<std::vector<Index>, kGenCount> succ;
  succ[slot(Gen::RInv)] = invert(r);
  succ[slot(Gen::LInv)] = invert(l);
  succ[slot(Gen::R)] = std::move(r);
  succ[slot(Gen::L)] = std::move(l);
  return std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ)));
}

// Field-born permutations: the action of t -> f(t) on the codes of F_q.
template <typename F>
Permutation field_map(const GaloisField& field, F f) {
  std::vector<Dart> images(field.order());
  for (GaloisField::Code t = 0; t < field.order(); ++t) images[t] = f(t);
  return Permutation(std::move(images));
}

FieldRef field_of_order(std::uint64_t q) {
  const auto [p, e] = prime_power(q);
  return make_field(p, e);
}

}  // namespace

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec FamilySpec::parse(std::string_view family, std::string_view params) {
  FamilySpec spec;
  spec.family = trim(family);
  if (spec.family.empty()) throw ValidationError("empty family name");
  std::string_view rest = params;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const std::string token = trim(item);
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      throw ValidationError("malformed parameter '" + token + "', expected key=value");
    // Bracketed values such as v=[0,1,1] contain commas of their own.
    std::string value = token.substr(eq + 1);
    if (value.front() == '[' && value.back() != ']') {
      while (!rest.empty() && value.back() != ']') {
        const auto next = rest.find(',');
        value += "," + trim(rest.substr(0, next));
        rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
      }
      if (value.back() != ']') throw ValidationError("unterminated '[' in parameter " + token);
    }
    spec.params[trim(token.substr(0, eq))] = value;
  }
  return spec;
}

FamilySpec FamilySpec::parse(std::string_view compact) {
  const auto colon = compact.find(':');
  if (colon == std::string_view::npos) return parse(compact, "");
  return parse(compact.substr(0, colon), compact.substr(colon + 1));
}

std::int64_t FamilySpec::integer(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ValidationError("family " + family + " needs parameter " + key);
  std::int64_t value = 0;
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ValidationError("parameter " + key + "=" + text + " is not an integer");
  return value;
}

std::int64_t FamilySpec::integer(const std::string& key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::string FamilySpec::label() const {
  static const std::map<std::string, std::vector<std::string>> kOrder{
      {"metacyclic", {"n", "m", "r", "s"}}, {"cyclic", {"p", "i", "j"}}, {"agammal1", {"q", "v"}},
      {"sl3", {"q", "seed"}}};
  std::vector<std::string> keys;
  if (auto it = kOrder.find(family); it != kOrder.end())
    for (const auto& k : it->second)
      if (has(k)) keys.push_back(k);
  for (const auto& [k, v] : params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::ostringstream out;
  out << family;
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? ',' : ':') << keys[i] << '=' << params.at(keys[i]);
  return out.str();
}

// ---------------------------------------------------------------------------
// Metacyclic and dihedral

TablePtr metacyclic_group(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t s) {
  if (n < 1 || m < 1) throw ValidationError("metacyclic needs n >= 1 and m >= 1");
  if (n * m > (std::int64_t{1} << 22)) throw ValidationError("metacyclic group order n*m too large");
  r = mod(r, n);
  s = mod(s, n);
  if (mod(r * s - s, n) != 0) throw ValidationError("metacyclic needs r*s = s (mod n)");
  if (pow_mod(r, m, n) != 1 % n) throw ValidationError("metacyclic needs r^m = 1 (mod n)");

  // Element a^i b^j has index i*m + j. Right multiplication:
  //   a^i b^j * a = a^(i + r^j) b^j,   a^i b^j * b = a^i b^(j+1), b^m = a^s.
  std::vector<std::int64_t> r_pow(m);
  for (std::int64_t j = 0; j < m; ++j) r_pow[j] = pow_mod(r, j, n);
  const auto size = static_cast<std::size_t>(n * m);
  std::vector<Index> by_a(size), by_b(size);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      const auto x = static_cast<std::size_t>(i * m + j);
      by_a[x] = static_cast<Index>(mod(i + r_pow[j], n) * m + j);
      by_b[x] = static_cast<Index>(j + 1 < m ? i * m + j + 1 : mod(i + s, n) * m);
    }
  }
  return table_from_maps(std::move(by_a), std::move(by_b));
}

Hypermap metacyclic(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t s) {
  return Hypermap::regular(metacyclic_group(n, m, r, s));
}

TablePtr dihedral_group(std::int64_t n) {
  if (n < 1) throw ValidationError("dihedral group needs n >= 1");
  return metacyclic_group(n, 2, n - 1, 0);
}

// ---------------------------------------------------------------------------
// Affine and semilinear groups over F_q

TablePtr agl1_group(std::uint64_t q) {
  const FieldRef f = field_of_order(q);
  const auto c = find_generator(f).code();
  const Permutation x = field_map(*f, [&](auto t) { return f->mul(c, t); });
  const Permutation y = field_map(*f, [&](auto t) { return f->add(t, f->one()); });
  auto table = enumerate_group(x, y);
  if (table->size() != q * (q - 1)) throw std::logic_error("AGL1(q) enumeration has the wrong order");
  return table;
}

Hypermap agl1(std::uint64_t q) { return Hypermap::regular(agl1_group(q)); }

Hypermap agamma_l1(std::uint64_t q, std::optional<GaloisField::Code> v) {
  const auto [p, e] = prime_power(q);
  if (p != 2) throw ValidationError("agammal1 needs q a power of 2");
  if (e <= 1) throw ValidationError("agammal1 needs q = 2^e with e > 1");
  const FieldRef f = make_field(p, e);
  const auto u = find_generator(f).code();
  const auto point = v.value_or(u);
  if (point >= q) throw ValidationError("agammal1 parameter v is not an element of F_q");
  if (point == 0 || point == 1) throw ValidationError("agammal1 needs v outside F_2");
  const auto shift = f->mul(f->sub(f->one(), u), point);
  const Permutation x = field_map(*f, [&](auto t) { return f->mul(t, t); });
  const Permutation y = field_map(*f, [&](auto t) { return f->add(f->mul(u, t), shift); });
  auto table = enumerate_group(x, y);
  if ((q * e * (q - 1)) % table->size() != 0) throw std::logic_error("<x, y> is not inside AGammaL1(q)");
  return Hypermap::regular(table);
}

// ---------------------------------------------------------------------------
// Permutation groups

TablePtr alternating_group(std::int64_t n, std::uint64_t group_budget) {
  if (n < 3) throw ValidationError("alternating group needs n >= 3");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<Dart> x(deg), y(deg);
  std::iota(x.begin(), x.end(), Dart{0});
  std::iota(y.begin(), y.end(), Dart{0});
  auto cycle = [](std::vector<Dart>& p, std::initializer_list<Dart> c) {
    std::vector<Dart> pts(c);
    for (std::size_t k = 0; k < pts.size(); ++k) p[pts[k]] = pts[(k + 1) % pts.size()];
  };
  if (n == 3) {
    cycle(x, {0, 1, 2});
  } else if (n == 4) {
    cycle(x, {0, 1, 2});
    cycle(y, {1, 2, 3});
  } else if (n % 2 == 1) {
    for (std::size_t k = 0; k < deg; ++k) x[k] = static_cast<Dart>((k + 1) % deg);
    cycle(y, {0, 1, 3});
  } else {
    for (std::size_t k = 0; k + 1 < deg; ++k) x[k] = static_cast<Dart>((k + 1) % (deg - 1));
    cycle(y, {0, static_cast<Dart>(deg - 1)});
    cycle(y, {1, 2});
  }
  auto table = enumerate_group(Permutation(x), Permutation(y), group_budget);
  std::uint64_t expected = 1;
  for (std::int64_t k = 3; k <= n; ++k) expected *= static_cast<std::uint64_t>(k);
  if (table->size() != expected) throw std::logic_error("alternating generators do not generate A_n");
  return table;
}

Hypermap alternating_map(std::int64_t n, std::uint64_t group_budget) {
  if (n < 5) throw ValidationError("alternating map needs n >= 5");
  return Hypermap::regular(alternating_group(n, group_budget));
}

TablePtr symmetric_group(std::int64_t n) {
  if (n < 2) throw ValidationError("symmetric group needs n >= 2");
  std::vector<Dart> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = static_cast<Dart>((k + 1) % x.size());
  std::iota(y.begin(), y.end(), Dart{0});
  std::swap(y[0], y[1]);
  return enumerate_group(Permutation(x), Permutation(y));
}

Hypermap cyclic_hypermap(std::int64_t p, std::int64_t i, std::int64_t j) {
  if (p < 1) throw ValidationError("cyclic hypermap needs p >= 1");
  if (std::gcd(std::gcd(mod(i, p), mod(j, p)), p) != 1)
    throw ValidationError("cyclic hypermap needs gcd(i, j, p) = 1 so that <a^i, a^j> = C_p");
  std::vector<Dart> r(static_cast<std::size_t>(p)), l(static_cast<std::size_t>(p));
  for (std::int64_t t = 0; t < p; ++t) {
    r[t] = static_cast<Dart>(mod(t + i, p));
    l[t] = static_cast<Dart>(mod(t + j, p));
  }
  return Hypermap::regular(enumerate_group(Permutation(r), Permutation(l)));
}

TablePtr cyclic_group(std::int64_t n) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  return cyclic_hypermap(n, 1, 0).monodromy();
}

Hypermap trivial_hypermap() { return Hypermap::make(Permutation::identity(1), Permutation::identity(1)); }

// ---------------------------------------------------------------------------
// PSL2(q) on the projective line

TablePtr psl2_group(std::uint64_t q) {
  const FieldRef f = field_of_order(q);
  const auto inf = static_cast<Dart>(q);
  using Code = GaloisField::Code;
  auto mobius = [&](Code a, Code b, Code c, Code d) {
    std::vector<Dart> images(q + 1);
    for (Dart z = 0; z <= inf; ++z) {
      if (z == inf) {
        images[z] = c == 0 ? inf : f->div(a, c);
        continue;
      }
      const Code den = f->add(f->mul(c, z), d);
      images[z] = den == 0 ? inf : f->div(f->add(f->mul(a, z), b), den);
    }
    return Permutation(std::move(images));
  };
  const std::uint64_t expected = q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
  const Permutation x = mobius(1, 1, 0, 1);
  const Code minus_one = f->neg(f->one());
  for (Code b = 0; b < q; ++b) {
    // z -> -1/(z + b)
    auto table = enumerate_group(x, mobius(0, minus_one, 1, b));
    if (table->size() == expected) return table;
  }
  throw std::logic_error("no generating pair found for PSL2(" + std::to_string(q) + ")");
}

// ---------------------------------------------------------------------------
// SL3(q)

std::uint64_t sl3_order(std::uint64_t q) { return q * q * q * (q * q - 1) * (q * q * q - 1); }

namespace {

using Matrix3 = std::array<GaloisField::Code, 9>;

Matrix3 matrix_from_index(std::uint64_t index, std::uint64_t q) {
  Matrix3 m{};
  for (auto& entry : m) {
    entry = static_cast<GaloisField::Code>(index % q);
    index /= q;
  }
  return m;
}

GaloisField::Code det3(const GaloisField& f, const Matrix3& m) {
  auto term = [&](int a, int b, int c) { return f.mul(m[a], f.mul(m[b], m[c])); };
  GaloisField::Code plus = f.add(f.add(term(0, 4, 8), term(1, 5, 6)), term(2, 3, 7));
  GaloisField::Code minus = f.add(f.add(term(2, 4, 6), term(0, 5, 7)), term(1, 3, 8));
  return f.sub(plus, minus);
}

// Row vectors v -> v M on the q^3 vectors, coded v0 + v1 q + v2 q^2.
Permutation vector_action(const GaloisField& f, const Matrix3& m) {
  const std::uint64_t q = f.order();
  std::vector<Dart> images(q * q * q);
  for (std::uint64_t code = 0; code < images.size(); ++code) {
    const GaloisField::Code v[3] = {static_cast<GaloisField::Code>(code % q),
                                    static_cast<GaloisField::Code>(code / q % q),
                                    static_cast<GaloisField::Code>(code / (q * q))};
    std::uint64_t out = 0, place = 1;
    for (int j = 0; j < 3; ++j) {
      GaloisField::Code w = 0;
      for (int i = 0; i < 3; ++i) w = f.add(w, f.mul(v[i], m[3 * i + j]));
      out += w * place;
      place *= q;
    }
    images[code] = static_cast<Dart>(out);
  }
  return Permutation(std::move(images));
}

bool is_identity(const Matrix3& m) { return m == Matrix3{1, 0, 0, 0, 1, 0, 0, 0, 1}; }

// Knuth's MMIX constants; the walk is part of the reproducible transcript.
class MatrixWalk {
 public:
  MatrixWalk(std::uint64_t seed, const GaloisField& f) : state_(seed), f_(f) {
    total_ = 1;
    for (int i = 0; i < 9; ++i) total_ *= f.order();
  }

  Matrix3 next_special() {
    while (true) {
      state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
      const Matrix3 m = matrix_from_index((state_ >> 11) % total_, f_.order());
      if (!is_identity(m) && det3(f_, m) == f_.one()) return m;
    }
  }

 private:
  std::uint64_t state_;
  std::uint64_t total_;
  const GaloisField& f_;
};

std::string format_diag(const GaloisField& f, const Matrix3& m) {
  return "diag(" + f.format(m[0]) + "," + f.format(m[4]) + "," + f.format(m[8]) + ")";
}

}  // namespace

Sl3Construction sl3_hypermap(std::uint64_t q, std::uint64_t seed, std::uint64_t group_budget) {
  const FieldRef f = field_of_order(q);
  const std::uint64_t order = sl3_order(q);
  if (order > group_budget)
    throw BudgetExceeded("|SL3(" + std::to_string(q) + ")| = " + std::to_string(order) + " exceeds group budget", 0);
  std::vector<std::string> notes;

  std::optional<Matrix3> x;
  const auto zeta = find_generator(f).code();
  const std::array<GaloisField::Code, 3> lambda{zeta, f->pow(zeta, 2), f->pow(zeta, -3)};
  if (lambda[0] != lambda[1] && lambda[0] != lambda[2] && lambda[1] != lambda[2]) {
    x = Matrix3{lambda[0], 0, 0, 0, lambda[1], 0, 0, 0, lambda[2]};
    notes.push_back("x = " + format_diag(*f, *x) + " from the canonical eigenvalues zeta, zeta^2, zeta^-3");
  } else {
    for (GaloisField::Code a = 1; a < q && !x; ++a)
      for (GaloisField::Code b = 1; b < q && !x; ++b) {
        const auto c = f->inv(f->mul(a, b));
        if (a != b && a != c && b != c) x = Matrix3{a, 0, 0, 0, b, 0, 0, 0, c};
      }
    if (x)
      notes.push_back("canonical eigenvalues not distinct; x = " + format_diag(*f, *x) + " by diagonal search");
    else
      notes.push_back("no diagonal det-1 matrix with distinct eigenvalues over F_" + std::to_string(q) +
                      "; x drawn from the seeded walk");
  }

  MatrixWalk walk(seed, *f);
  constexpr std::uint64_t kMaxAttempts = 10'000;
  for (std::uint64_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    const Matrix3 mx = x ? *x : walk.next_special();
    const Matrix3 my = walk.next_special();
    auto table = enumerate_group(vector_action(*f, mx), vector_action(*f, my), group_budget);
    if (table->size() == order) {
      notes.push_back("y found after " + std::to_string(attempt) + " candidate(s), seed " + std::to_string(seed));
      return {Hypermap::regular(table), std::move(notes), attempt};
    }
  }
  throw ValidationError("no generating pair for SL3(" + std::to_string(q) + ") within the search limit");
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

GaloisField::Code parse_field_element(const std::string& text, std::uint64_t q) {
  const FieldRef f = field_of_order(q);
  if (!text.empty() && text.front() == '[') {
    std::vector<std::uint32_t> coeffs;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(trim(item))));
    if (coeffs.size() > f->degree()) throw ValidationError("field element " + text + " has too many coefficients");
    return f->from_coefficients(coeffs);
  }
  std::uint64_t code = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), code);
  if (ec != std::errc{} || ptr != text.data() + text.size() || code >= q)
    throw ValidationError("bad field element '" + text + "'");
  return static_cast<GaloisField::Code>(code);
}

std::uint64_t positive(const FamilySpec& spec, const std::string& key) {
  const auto v = spec.integer(key);
  if (v < 1) throw ValidationError("parameter " + key + " must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Construction build_hypermap(const FamilySpec& spec, const Budgets& budgets) {
  const std::string& fam = spec.family;
  Construction out{spec, trivial_hypermap(), {}, true};
  if (fam == "metacyclic") {
    const auto m = spec.integer("m");
    out.hypermap = metacyclic(spec.integer("n"), m, spec.integer("r"), spec.integer("s", 0));
    if (m <= 2) out.notes.push_back("warning: m <= 2, outside the range where chirality is guaranteed");
  } else if (fam == "agl1") {
    out.hypermap = agl1(positive(spec, "q"));
  } else if (fam == "agammal1") {
    const auto q = positive(spec, "q");
    std::optional<GaloisField::Code> v;
    if (spec.has("v")) v = parse_field_element(spec.params.at("v"), q);
    out.hypermap = agamma_l1(q, v);
  } else if (fam == "alt") {
    out.hypermap = alternating_map(spec.integer("n"), budgets.group);
  } else if (fam == "cyclic") {
    out.hypermap = cyclic_hypermap(spec.integer("p"), spec.integer("i"), spec.integer("j"));
  } else if (fam == "dihedral") {
    out.hypermap = Hypermap::regular(dihedral_group(spec.integer("n")));
  } else if (fam == "psl2") {
    out.hypermap = Hypermap::regular(psl2_group(positive(spec, "q")));
  } else if (fam == "symmetric") {
    out.hypermap = Hypermap::regular(symmetric_group(spec.integer("n")));
  } else if (fam == "sl3") {
    auto built = sl3_hypermap(positive(spec, "q"), static_cast<std::uint64_t>(spec.integer("seed", 0)), budgets.group);
    out.hypermap = std::move(built.hypermap);
    out.notes = std::move(built.notes);
    const std::uint64_t g = out.hypermap.darts();
    out.chirality_in_budget = g * g <= budgets.pairs;
    if (!out.chirality_in_budget) out.notes.push_back("|Mon|^2 exceeds the pair budget; order-only verdict");
  } else if (fam == "trivial") {
    out.hypermap = trivial_hypermap();
  } else {
    throw ValidationError("unknown hypermap family '" + fam + "'");
  }
  return out;
}

TablePtr build_group(const FamilySpec& spec, const Budgets& budgets) {
  const std::string& fam = spec.family;
  if (fam == "cyclic" && !spec.has("p")) return cyclic_group(spec.integer("n"));
  if (fam == "dihedral") return dihedral_group(spec.integer("n"));
  if (fam == "symmetric") return symmetric_group(spec.integer("n"));
  if (fam == "alternating") return alternating_group(spec.integer("n"), budgets.group);
  if (fam == "psl2") return psl2_group(positive(spec, "q"));
  if (fam == "agl1") return agl1_group(positive(spec, "q"));
  return build_hypermap(spec, budgets).hypermap.monodromy(budgets.group);
}

}  // namespace chirality_lab
