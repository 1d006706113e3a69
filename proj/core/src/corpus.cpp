#include "ncgraph/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {
namespace {

Permutation cycle_perm(std::size_t degree) {
  std::vector<elem_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<elem_t>((i + 1) % degree);
  return Permutation(std::move(im));
}

FiniteGroup make_cyclic(std::uint32_t n, std::uint32_t cap) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  if (n == 1) return FiniteGroup::enumerate({}, "C1", cap, 1);
  return FiniteGroup::enumerate({cycle_perm(n)}, "C" + std::to_string(n), cap);
}

FiniteGroup make_dihedral(std::uint32_t order, std::uint32_t cap) {
  if (order < 2 || order % 2) throw std::invalid_argument("dihedral order must be even");
  const std::uint32_t n = order / 2;
  std::string name = "D" + std::to_string(order);
  if (n == 1) {
    return FiniteGroup::enumerate({Permutation({1, 0})}, name, cap);
  }
  if (n == 2) {
    // symmetries of a digon on vertex and edge markers
    return FiniteGroup::enumerate({Permutation({1, 0, 3, 2}), Permutation({0, 1, 3, 2})},
                                  name, cap);
  }
  std::vector<elem_t> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return FiniteGroup::enumerate({cycle_perm(n), Permutation(std::move(refl))}, name, cap);
}

FiniteGroup make_dicyclic(std::uint32_t order, std::uint32_t cap) {
  if (order < 4 || order % 4) throw std::invalid_argument("dicyclic order must be a multiple of 4");
  const std::uint32_t n2 = order / 2;  // |<a>| = 2n
  const std::uint32_t half = n2 / 2;
  std::vector<std::vector<elem_t>> t(order, std::vector<elem_t>(order));
  for (std::uint32_t i = 0; i < n2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      const std::uint32_t x = i + n2 * j;
      for (std::uint32_t k = 0; k < n2; ++k)
        for (std::uint32_t l = 0; l < 2; ++l) {
          const std::uint32_t y = k + n2 * l;
          if (j == 0)
            t[x][y] = (i + k) % n2 + n2 * l;
          else if (l == 0)
            t[x][y] = (i + n2 - k) % n2 + n2;
          else
            t[x][y] = (i + n2 - k + half) % n2;
        }
    }
  const bool two_power = (order & (order - 1)) == 0;
  std::string name = (two_power ? "Q" : "Dic") + std::to_string(order);
  if (order > cap) throw cap_error("group too large: order exceeds cap");
  return FiniteGroup::from_cayley_table(t, name);
}

FiniteGroup make_symmetric(std::uint32_t n, std::uint32_t cap) {
  if (n < 1) throw std::invalid_argument("symmetric degree must be positive");
  std::string name = "S" + std::to_string(n);
  if (n == 1) return FiniteGroup::enumerate({}, name, cap, 1);
  std::vector<elem_t> swap01(n);
  for (std::uint32_t i = 0; i < n; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  return FiniteGroup::enumerate({Permutation(std::move(swap01)), cycle_perm(n)}, name, cap);
}

FiniteGroup make_alternating(std::uint32_t n, std::uint32_t cap) {
  std::string name = "A" + std::to_string(n);
  if (n < 3) return FiniteGroup::enumerate({}, name, cap, std::max<std::uint32_t>(n, 1));
  std::vector<elem_t> three(n);
  for (std::uint32_t i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return FiniteGroup::enumerate({Permutation(std::move(three))}, name, cap);
  std::vector<elem_t> big(n);
  if (n % 2) {
    for (std::uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    big[0] = 0;
    for (std::uint32_t i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
  }
  return FiniteGroup::enumerate({Permutation(std::move(three)), Permutation(std::move(big))},
                                name, cap);
}

FiniteGroup make_heisenberg(std::uint32_t p, std::uint32_t cap) {
  for (std::uint32_t d = 2; d < p; ++d)
    if (p % d == 0) throw std::invalid_argument("heisenberg parameter must be prime");
  if (p < 2) throw std::invalid_argument("heisenberg parameter must be prime");
  const std::uint32_t deg = p * p * p;
  auto idx = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return (a * p + b) * p + c;
  };
  // unitriangular shears acting on column vectors over F_p
  std::vector<elem_t> x_im(deg), y_im(deg);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        x_im[idx(a, b, c)] = idx((a + b) % p, b, c);
        y_im[idx(a, b, c)] = idx(a, (b + c) % p, c);
      }
  return FiniteGroup::enumerate({Permutation(std::move(x_im)), Permutation(std::move(y_im))},
                                "Heis" + std::to_string(p), cap);
}

struct TermSpec {
  char family;  // 'C', 'D', 'Q', 'S', 'A', 'H'
  std::uint32_t param;
  std::uint32_t power;
};

TermSpec parse_term(const std::string& term) {
  auto read_num = [&](std::size_t pos) -> std::uint32_t {
    if (pos >= term.size()) throw std::invalid_argument("bad group spec: " + term);
    std::size_t end = pos;
    while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end]))) ++end;
    if (end == pos || end != term.size())
      throw std::invalid_argument("bad group spec: " + term);
    return static_cast<std::uint32_t>(std::stoul(term.substr(pos)));
  };
  static const std::pair<const char*, char> long_names[] = {
      {"cyclic(", 'C'},     {"dihedral(", 'D'},    {"dicyclic(", 'Q'},
      {"symmetric(", 'S'},  {"alternating(", 'A'}, {"heisenberg(", 'H'}};
  for (auto [prefix, fam] : long_names) {
    const std::size_t plen = std::string(prefix).size();
    if (term.rfind(prefix, 0) == 0 && term.back() == ')') {
      std::string inner = term.substr(plen, term.size() - plen - 1);
      if (inner.empty() ||
          !std::all_of(inner.begin(), inner.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad group spec: " + term);
      return {fam, static_cast<std::uint32_t>(std::stoul(inner)), 1};
    }
  }
  if (term.rfind("Heis", 0) == 0) return {'H', read_num(4), 1};
  if (term.rfind("Dic", 0) == 0) return {'Q', read_num(3), 1};
  if (!term.empty() && std::string("CDQSA").find(term[0]) != std::string::npos)
    return {term[0], read_num(1), 1};
  throw std::invalid_argument("bad group spec: " + term);
}

FiniteGroup build_term(const TermSpec& t, std::uint32_t cap) {
  switch (t.family) {
    case 'C': return make_cyclic(t.param, cap);
    case 'D': return make_dihedral(t.param, cap);
    case 'Q': return make_dicyclic(t.param, cap);
    case 'S': return make_symmetric(t.param, cap);
    case 'A': return make_alternating(t.param, cap);
    case 'H': return make_heisenberg(t.param, cap);
  }
  throw std::invalid_argument("bad group family");
}

}  // namespace

FiniteGroup builtin(const std::string& spec, std::uint32_t cap) {
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == 'x') {
      if (i == start) throw std::invalid_argument("bad group spec: " + spec);
      terms.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  std::vector<FiniteGroup> parts;
  for (std::string term : terms) {
    std::uint32_t power = 1;
    if (auto caret = term.find('^'); caret != std::string::npos) {
      std::string exp = term.substr(caret + 1);
      if (exp.empty() ||
          !std::all_of(exp.begin(), exp.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad group spec: " + term);
      power = static_cast<std::uint32_t>(std::stoul(exp));
      if (power < 1) throw std::invalid_argument("bad group spec: " + term);
      term = term.substr(0, caret);
    }
    TermSpec ts = parse_term(term);
    FiniteGroup base = build_term(ts, cap);
    for (std::uint32_t k = 1; k < power; ++k)
      base = direct_product(base, build_term(ts, cap), "", cap);
    if (power > 1) base.rename(term + "^" + std::to_string(power));
    parts.push_back(std::move(base));
  }
  FiniteGroup out = std::move(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string name = out.name() + "x" + parts[i].name();
    out = direct_product(out, parts[i], name, cap);
  }
  return out;
}

std::vector<CorpusEntry> standard_corpus(std::uint32_t max_order,
                                         std::uint32_t lattice_cap) {
  struct Base {
    std::string name;
    std::shared_ptr<GroupContext> ctx;
  };
  std::vector<Base> base;
  auto add_base = [&](const std::string& spec) {
    auto g = std::make_shared<const FiniteGroup>(builtin(spec));
    base.push_back({spec, std::make_shared<GroupContext>(g, lattice_cap)});
  };
  for (std::uint32_t n = 1; n <= 24; ++n) add_base("C" + std::to_string(n));
  for (std::uint32_t m = 6; m <= 48; m += 2) add_base("D" + std::to_string(m));
  for (std::uint32_t m = 8; m <= 48; m += 4)
    add_base(((m & (m - 1)) == 0 ? "Q" : "Dic") + std::to_string(m));
  for (std::uint32_t n = 1; n <= 4; ++n) add_base("S" + std::to_string(n));
  for (std::uint32_t n = 3; n <= 4; ++n) add_base("A" + std::to_string(n));
  add_base("Heis2");
  add_base("Heis3");

  std::vector<CorpusEntry> out;
  std::vector<std::string> names;
  auto have = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  auto add_entry = [&](const std::string& name, std::shared_ptr<GroupContext> ctx) {
    if (have(name)) return;
    names.push_back(name);
    out.push_back({name, std::move(ctx)});
  };
  auto add_product = [&](const Base& a, const Base& b) {
    const std::string name = a.name + "x" + b.name;
    if (have(name)) return;
    auto g = std::make_shared<const FiniteGroup>(
        direct_product(a.ctx->group(), b.ctx->group(), name));
    auto ctx = std::make_shared<GroupContext>(g, lattice_cap);
    ctx->set_factors(a.ctx, b.ctx);
    add_entry(name, ctx);
  };

  for (const Base& b : base)
    if (b.ctx->group().order() <= max_order) add_entry(b.name, b.ctx);

  // named products
  auto find_base = [&](const std::string& n) -> const Base& {
    for (const Base& b : base)
      if (b.name == n) return b;
    throw std::logic_error("missing base group " + n);
  };
  std::shared_ptr<GroupContext> c3sq;  // C3^2 as a factor
  {
    auto g = std::make_shared<const FiniteGroup>(builtin("C3^2"));
    c3sq = std::make_shared<GroupContext>(g, lattice_cap);
  }
  struct Named {
    const char* left;
    const char* right;
  };
  for (auto [l, r] : {Named{"D8", "C3"}, Named{"Q8", "C3"}, Named{"Q8", "C5"},
                      Named{"S3", "C2"}}) {
    const Base& a = find_base(l);
    const Base& b = find_base(r);
    if (a.ctx->group().order() * b.ctx->group().order() <= max_order) add_product(a, b);
  }
  if (8 * 9 <= max_order) {
    const Base& d8 = find_base("D8");
    const std::string name = "D8xC3^2";
    auto g = std::make_shared<const FiniteGroup>(
        direct_product(d8.ctx->group(), c3sq->group(), name));
    auto ctx = std::make_shared<GroupContext>(g, lattice_cap);
    ctx->set_factors(d8.ctx, c3sq);
    add_entry(name, ctx);
  }

  // all pairwise products of base members, order <= min(200, max_order)
  const std::uint32_t product_bound = std::min<std::uint32_t>(200, max_order);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      if (base[i].ctx->group().order() * base[j].ctx->group().order() <= product_bound)
        add_product(base[i], base[j]);

  return out;
}

}  // namespace ncg
