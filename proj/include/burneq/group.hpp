#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace burneq
{

using ElementIndex = std::uint32_t;

/// Image array of a bijection on {0..k-1}: point i maps to perm[i].
using Permutation = std::vector<std::uint32_t>;

/// Composition "apply b, then a".
Permutation compose(Permutation const &a, Permutation const &b);

/// Disjoint cycle notation on 1-based points, fixed points omitted;
/// the identity prints as "()".
std::string cycle_notation(Permutation const &p);

/// Order cap used when none is given: BURNEQ_ORDER_CAP if set, else 2000.
std::size_t default_order_cap();

/// A finite group stored as a complete multiplication table over element
/// indices. Index 0 is the identity; the remaining indices follow the
/// breadth-first order in which the closure of the generators found them.
class FiniteGroup
{
public:
  static constexpr std::size_t kDefaultOrderCap = 2000;

  std::size_t order() const
  { return _perms.size(); }

  std::size_t degree() const
  { return _degree; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const
  { return _table[static_cast<std::size_t>(a) * order() + b]; }

  ElementIndex inverse(ElementIndex a) const
  { return _inverses[a]; }

  ElementIndex conjugate(ElementIndex g, ElementIndex h) const
  { return mul(mul(g, h), inverse(g)); }

  Permutation const &perm(ElementIndex a) const
  { return _perms[a]; }

  std::vector<Permutation> const &generators() const
  { return _generators; }

  /// Element index of generator i.
  ElementIndex generator_element(std::size_t i) const
  { return _generator_elements[i]; }

  /// Breadth-first spanning tree: for a != 0, a = parent(a) * generator(step(a)).
  ElementIndex parent(ElementIndex a) const
  { return _parent[a]; }

  std::size_t step(ElementIndex a) const
  { return _step[a]; }

  /// Index of the element acting as p, or order() when p is not in the group.
  std::size_t find(Permutation const &p) const;

private:
  friend FiniteGroup generate_group(std::vector<Permutation> const &, std::size_t);

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<ElementIndex> _generator_elements;
  std::vector<Permutation> _perms;
  std::vector<ElementIndex> _table;
  std::vector<ElementIndex> _inverses;
  std::vector<ElementIndex> _parent;
  std::vector<std::size_t> _step;
  std::map<Permutation, ElementIndex> _index;
};

/// Closure of the generators under composition.
/// Throws EmptyGeneratorList, InvalidPermutation or OrderCapExceeded.
FiniteGroup generate_group(std::vector<Permutation> const &generators,
                           std::size_t order_cap = default_order_cap());

struct Subgroup
{
  std::vector<ElementIndex> elements; // sorted, contains 0

  std::size_t order() const
  { return elements.size(); }

  bool contains(ElementIndex g) const;

  /// Set inclusion.
  bool is_subset_of(Subgroup const &other) const;

  friend auto operator<=>(Subgroup const &a, Subgroup const &b)
  {
    if (a.order() != b.order())
      return a.order() <=> b.order();
    return a.elements <=> b.elements;
  }
  friend bool operator==(Subgroup const &, Subgroup const &) = default;
};

/// Smallest subgroup containing the given elements.
Subgroup closure(FiniteGroup const &G, std::vector<ElementIndex> const &generators);

bool is_subgroup(FiniteGroup const &G, std::vector<ElementIndex> const &elements);

Subgroup conjugate(FiniteGroup const &G, Subgroup const &H, ElementIndex g);

Subgroup intersection(Subgroup const &a, Subgroup const &b);

/// Greedy generating set: scan H in index order, keep an element when it is
/// not already in the span of the ones kept so far.
std::vector<ElementIndex> small_generating_set(FiniteGroup const &G, Subgroup const &H);

/// Every subgroup exactly once, sorted by (order, element set).
std::vector<Subgroup> all_subgroups(FiniteGroup const &G);

struct SubgroupClass
{
  Subgroup representative; // lexicographically smallest member
  std::vector<Subgroup> members;
  std::size_t class_index = 0;
};

/// Conjugacy classes of the given subgroups in canonical order: ascending
/// order, ties broken by the element set of the smallest member.
std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &G,
                                            std::vector<Subgroup> const &subgroups);

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &G);

/// (a) <= (b): some member of a lies inside some member of b.
bool class_leq(SubgroupClass const &a, SubgroupClass const &b);

struct WeylData
{
  Subgroup subgroup;
  Subgroup normalizer;
  std::size_t weyl_order = 0;
  std::vector<ElementIndex> weyl_coset_reps;
};

/// Throws NotASubgroup.
WeylData weyl_data(FiniteGroup const &G, Subgroup const &H);

/// Subgroup lattice of one group with conjugacy-class bookkeeping. Built
/// once; every query afterwards is a lookup.
class SubgroupLattice
{
public:
  explicit SubgroupLattice(std::shared_ptr<FiniteGroup const> group);

  FiniteGroup const &group() const
  { return *_group; }

  std::shared_ptr<FiniteGroup const> const &group_ptr() const
  { return _group; }

  std::vector<Subgroup> const &subgroups() const
  { return _subgroups; }

  std::vector<SubgroupClass> const &classes() const
  { return _classes; }

  std::size_t class_count() const
  { return _classes.size(); }

  /// Class index of a subgroup; throws NotASubgroup for non-subgroups.
  std::size_t class_of(Subgroup const &H) const;

  /// Position of H in subgroups(); throws NotASubgroup.
  std::size_t subgroup_index(Subgroup const &H) const;

  bool leq(std::size_t a, std::size_t b) const
  { return _leq[a * _classes.size() + b]; }

  WeylData const &weyl(std::size_t cls) const
  { return _weyl[cls]; }

  /// "e" for the trivial class, "G" for the whole group, otherwise the
  /// cycle notation of the representative's generating set joined by ",".
  std::string const &label(std::size_t cls) const
  { return _labels[cls]; }

  /// Class index for a label, or class_count() when unknown.
  std::size_t find_label(std::string const &label) const;

  std::size_t trivial_class() const
  { return 0; }

  std::size_t whole_class() const
  { return _classes.size() - 1; }

private:
  std::shared_ptr<FiniteGroup const> _group;
  std::vector<Subgroup> _subgroups;
  std::vector<SubgroupClass> _classes;
  std::vector<std::size_t> _subgroup_class;
  std::map<std::vector<ElementIndex>, std::size_t> _subgroup_index;
  std::vector<bool> _leq;
  std::vector<WeylData> _weyl;
  std::vector<std::string> _labels;
};

} // namespace burneq
