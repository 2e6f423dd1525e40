#include "burneq/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "burneq/error.hpp"

namespace burneq
{

Permutation compose(Permutation const &a, Permutation const &b)
{
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

std::string cycle_notation(Permutation const &p)
{
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first)
        out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = p[i];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t default_order_cap()
{
  if (char const *env = std::getenv("BURNEQ_ORDER_CAP")) {
    char *end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0)
      return static_cast<std::size_t>(cap);
  }
  return FiniteGroup::kDefaultOrderCap;
}

std::size_t FiniteGroup::find(Permutation const &p) const
{
  auto it = _index.find(p);
  return it == _index.end() ? order() : it->second;
}

FiniteGroup generate_group(std::vector<Permutation> const &generators, std::size_t order_cap)
{
  if (generators.empty())
    throw Error(ErrorKind::EmptyGeneratorList, "at least one generator is required");

  std::size_t const k = generators.front().size();
  for (auto const &gen : generators) {
    if (gen.size() != k)
      throw Error(ErrorKind::InvalidPermutation, "generators act on sets of different sizes");
    std::vector<bool> hit(k, false);
    for (auto image : gen) {
      if (image >= k || hit[image])
        throw Error(ErrorKind::InvalidPermutation,
                    "generator " + cycle_notation(gen) + " is not a bijection");
      hit[image] = true;
    }
  }

  FiniteGroup G;
  G._degree = k;
  G._generators = generators;

  Permutation identity(k);
  for (std::size_t i = 0; i < k; ++i)
    identity[i] = static_cast<std::uint32_t>(i);

  G._perms.push_back(identity);
  G._index.emplace(identity, 0);
  G._parent.push_back(0);
  G._step.push_back(0);

  // right_mult[a * ngens + s] = index of a * gen_s
  std::size_t const ngens = generators.size();
  std::vector<ElementIndex> right_mult;

  for (std::size_t a = 0; a < G._perms.size(); ++a) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation p = compose(G._perms[a], generators[s]);
      auto [it, inserted] = G._index.emplace(p, static_cast<ElementIndex>(G._perms.size()));
      if (inserted) {
        if (G._perms.size() >= order_cap)
          throw Error(ErrorKind::OrderCapExceeded,
                      "group order exceeds cap " + std::to_string(order_cap));
        G._perms.push_back(std::move(p));
        G._parent.push_back(static_cast<ElementIndex>(a));
        G._step.push_back(s);
      }
      right_mult.push_back(it->second);
    }
  }

  for (std::size_t s = 0; s < ngens; ++s)
    G._generator_elements.push_back(right_mult[s]);

  std::size_t const n = G._perms.size();
  G._table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    G._table[a * n] = static_cast<ElementIndex>(a);
    // parents precede children in breadth-first order
    for (std::size_t b = 1; b < n; ++b) {
      ElementIndex left = G._table[a * n + G._parent[b]];
      G._table[a * n + b] = right_mult[left * ngens + G._step[b]];
    }
  }

  G._inverses.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (G._table[a * n + b] == 0) {
        G._inverses[a] = static_cast<ElementIndex>(b);
        break;
      }

  return G;
}

bool Subgroup::contains(ElementIndex g) const
{ return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::includes(other.elements.begin(), other.elements.end(),
                       elements.begin(), elements.end());
}

Subgroup closure(FiniteGroup const &G, std::vector<ElementIndex> const &generators)
{
  std::vector<bool> member(G.order(), false);
  std::vector<ElementIndex> elements{0};
  member[0] = true;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (auto s : generators) {
      ElementIndex p = G.mul(elements[i], s);
      if (!member[p]) {
        member[p] = true;
        elements.push_back(p);
      }
    }
  std::sort(elements.begin(), elements.end());
  return Subgroup{std::move(elements)};
}

bool is_subgroup(FiniteGroup const &G, std::vector<ElementIndex> const &elements)
{
  if (elements.empty())
    return false;
  std::vector<bool> member(G.order(), false);
  for (auto g : elements) {
    if (g >= G.order() || member[g])
      return false;
    member[g] = true;
  }
  if (!member[0])
    return false;
  for (auto a : elements) {
    if (!member[G.inverse(a)])
      return false;
    for (auto b : elements)
      if (!member[G.mul(a, b)])
        return false;
  }
  return true;
}

Subgroup conjugate(FiniteGroup const &G, Subgroup const &H, ElementIndex g)
{
  Subgroup out;
  out.elements.reserve(H.order());
  for (auto h : H.elements)
    out.elements.push_back(G.conjugate(g, h));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(),
                        b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

std::vector<ElementIndex> small_generating_set(FiniteGroup const &G, Subgroup const &H)
{
  std::vector<ElementIndex> gens;
  Subgroup span = closure(G, gens);
  for (auto h : H.elements) {
    if (span.contains(h))
      continue;
    gens.push_back(h);
    span = closure(G, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(FiniteGroup const &G)
{
  struct Known
  {
    Subgroup group;
    std::vector<ElementIndex> gens;
  };

  std::vector<Known> found{{Subgroup{{0}}, {}}};
  std::set<std::vector<ElementIndex>> seen{{0}};

  for (std::size_t i = 0; i < found.size(); ++i) {
    // <S, g> = <S, gs> for s in S, so one element per coset gS suffices
    std::vector<bool> done(G.order(), false);
    for (auto s : found[i].group.elements)
      done[s] = true;

    for (ElementIndex g = 0; g < G.order(); ++g) {
      if (done[g])
        continue;
      for (auto s : found[i].group.elements)
        done[G.mul(g, s)] = true;

      auto gens = found[i].gens;
      gens.push_back(g);
      Subgroup bigger = closure(G, gens);
      if (seen.insert(bigger.elements).second)
        found.push_back({std::move(bigger), std::move(gens)});
    }
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto &k : found)
    result.push_back(std::move(k.group));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &G,
                                            std::vector<Subgroup> const &subgroups)
{
  std::vector<Subgroup> sorted = subgroups;
  std::sort(sorted.begin(), sorted.end());

  std::set<std::vector<ElementIndex>> assigned;
  std::vector<SubgroupClass> classes;
  for (auto const &H : sorted) {
    if (assigned.count(H.elements))
      continue;

    std::set<Subgroup> conjugates;
    for (ElementIndex g = 0; g < G.order(); ++g)
      conjugates.insert(conjugate(G, H, g));

    SubgroupClass cls;
    cls.representative = H;
    cls.class_index = classes.size();
    for (auto const &K : conjugates) {
      assigned.insert(K.elements);
      cls.members.push_back(K);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &G)
{ return subgroup_classes(G, all_subgroups(G)); }

bool class_leq(SubgroupClass const &a, SubgroupClass const &b)
{
  if (a.representative.order() > b.representative.order() ||
      b.representative.order() % a.representative.order() != 0)
    return false;
  return std::any_of(b.members.begin(), b.members.end(), [&](Subgroup const &K) {
    return a.representative.is_subset_of(K);
  });
}

WeylData weyl_data(FiniteGroup const &G, Subgroup const &H)
{
  if (!is_subgroup(G, H.elements) ||
      !std::is_sorted(H.elements.begin(), H.elements.end()))
    throw Error(ErrorKind::NotASubgroup, "element set is not a sorted subgroup");

  WeylData data;
  data.subgroup = H;
  for (ElementIndex g = 0; g < G.order(); ++g)
    if (conjugate(G, H, g) == H)
      data.normalizer.elements.push_back(g);
  data.weyl_order = data.normalizer.order() / H.order();

  std::vector<bool> covered(G.order(), false);
  for (auto g : data.normalizer.elements) {
    if (covered[g])
      continue;
    data.weyl_coset_reps.push_back(g);
    for (auto h : H.elements)
      covered[G.mul(g, h)] = true;
  }
  return data;
}

SubgroupLattice::SubgroupLattice(std::shared_ptr<FiniteGroup const> group)
: _group(std::move(group))
{
  FiniteGroup const &G = *_group;
  _subgroups = all_subgroups(G);
  _classes = subgroup_classes(G, _subgroups);

  for (std::size_t i = 0; i < _subgroups.size(); ++i)
    _subgroup_index.emplace(_subgroups[i].elements, i);

  _subgroup_class.assign(_subgroups.size(), 0);
  for (auto const &cls : _classes)
    for (auto const &K : cls.members)
      _subgroup_class[_subgroup_index.at(K.elements)] = cls.class_index;

  std::size_t const c = _classes.size();
  _leq.assign(c * c, false);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      _leq[a * c + b] = class_leq(_classes[a], _classes[b]);

  for (auto const &cls : _classes)
    _weyl.push_back(weyl_data(G, cls.representative));

  for (auto const &cls : _classes) {
    if (cls.representative.order() == 1) {
      _labels.push_back("e");
    } else if (cls.representative.order() == G.order()) {
      _labels.push_back("G");
    } else {
      std::string label;
      for (auto g : small_generating_set(G, cls.representative)) {
        if (!label.empty())
          label += ",";
        label += cycle_notation(G.perm(g));
      }
      _labels.push_back(label);
    }
  }
}

std::size_t SubgroupLattice::class_of(Subgroup const &H) const
{ return _subgroup_class[subgroup_index(H)]; }

std::size_t SubgroupLattice::subgroup_index(Subgroup const &H) const
{
  auto it = _subgroup_index.find(H.elements);
  if (it == _subgroup_index.end())
    throw Error(ErrorKind::NotASubgroup, "element set is not a subgroup of this group");
  return it->second;
}

std::size_t SubgroupLattice::find_label(std::string const &label) const
{
  auto it = std::find(_labels.begin(), _labels.end(), label);
  return static_cast<std::size_t>(it - _labels.begin());
}

} // namespace burneq
