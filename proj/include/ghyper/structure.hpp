#ifndef GHYPER_STRUCTURE_HPP_
#define GHYPER_STRUCTURE_HPP_

#include <algorithm>      // for sort, min, fill
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, uint64_t
#include <limits>         // for numeric_limits
#include <optional>       // for optional
#include <random>         // for mt19937_64, uniform_int_distribution
#include <string>         // for string, to_string
#include <thread>         // for thread
#include <unordered_map>  // for unordered_map
#include <utility>        // for move, pair
#include <vector>         // for vector

#include <boost/dynamic_bitset.hpp>

#include "bits.hpp"        // for SubsetMask
#include "classify.hpp"    // for enumerate_class, is_shift_invariant
#include "enumerate.hpp"   // for enumerate_all
#include "errors.hpp"      // for InputError, BudgetExceeded, SizeLimitError
#include "groupoid.hpp"    // for Groupoid
#include "hyperspace.hpp"  // for Hyperspace, principal, minimum, maximum
#include "product.hpp"     // for product, left_shift

namespace ghyper {

  using ElementSet = boost::dynamic_bitset<>;

  //! Largest element set a SemigroupView will tabulate.
  inline constexpr std::size_t max_view_elements = 8192;

  //! An m x m multiplication table on element indices.  `absent` marks a
  //! product that falls outside the element list.
  class CayleyTable {
   public:
    static constexpr std::uint32_t absent = std::numeric_limits<std::uint32_t>::max();

    CayleyTable() = default;
    explicit CayleyTable(std::size_t m) : _m(m), _cells(m * m, absent) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _m;
    }
    [[nodiscard]] std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
      return _cells[i * _m + j];
    }
    std::uint32_t& at(std::size_t i, std::size_t j) noexcept {
      return _cells[i * _m + j];
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    std::size_t                _m = 0;
    std::vector<std::uint32_t> _cells;
  };

  //! A finite set of hyperspaces together with the product restricted to it,
  //! or an abstract table (quotients) with labels only.
  class SemigroupView {
   public:
    struct Escape {
      std::size_t left;
      std::size_t right;
      Hyperspace  value;
    };

    //! An abstract closed view; associativity is checked on the table.
    static SemigroupView from_table(std::vector<std::string> labels, CayleyTable table);

    [[nodiscard]] std::size_t size() const noexcept {
      return _table.size();
    }
    //! Index of the product of elements i and j, or CayleyTable::absent.
    [[nodiscard]] std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
      return _table(i, j);
    }
    [[nodiscard]] CayleyTable const& table() const noexcept {
      return _table;
    }
    //! Empty for abstract views.
    [[nodiscard]] std::vector<Hyperspace> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] bool closed() const noexcept {
      return !_escape.has_value();
    }
    [[nodiscard]] std::optional<Escape> const& first_escape() const noexcept {
      return _escape;
    }
    [[nodiscard]] bool is_associative() const noexcept {
      return _associative;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(Hyperspace const& h) const {
      auto it = _index.find(h);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

   private:
    friend SemigroupView subsemigroup_view(Groupoid const&, std::vector<Hyperspace>, std::size_t);

    std::vector<Hyperspace>                                  _elements;
    std::vector<std::string>                                 _labels;
    std::unordered_map<Hyperspace, std::size_t, HyperspaceHash> _index;
    CayleyTable                                              _table;
    std::optional<Escape>                                    _escape;
    bool                                                     _associative = false;
  };

  namespace detail {
    inline void require_closed(SemigroupView const& s) {
      if (!s.closed()) {
        throw InputError("the element set is not closed under the product");
      }
    }

    inline bool table_is_associative(CayleyTable const& t) {
      auto const m = t.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          auto const ij = t(i, j);
          for (std::size_t k = 0; k < m; ++k) {
            if (t(ij, k) != t(i, t(j, k))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    inline std::vector<std::size_t> to_indices(ElementSet const& s) {
      std::vector<std::size_t> out;
      for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
        out.push_back(i);
      }
      return out;
    }
  }  // namespace detail

  inline SemigroupView SemigroupView::from_table(std::vector<std::string> labels,
                                                 CayleyTable              table) {
    if (labels.size() != table.size()) {
      throw InputError("from_table: label count does not match the table");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        if (table(i, j) >= table.size()) {
          throw InputError("from_table: entry out of range");
        }
      }
    }
    SemigroupView s;
    s._labels      = std::move(labels);
    s._table       = std::move(table);
    s._associative = detail::table_is_associative(s._table);
    return s;
  }

  //! Tabulates the product on `elements`.  Columns are split among
  //! `workers` threads; the result does not depend on the worker count.
  inline SemigroupView subsemigroup_view(Groupoid const&         g,
                                         std::vector<Hyperspace> elements,
                                         std::size_t             workers = 1) {
    if (elements.size() > max_view_elements) {
      throw SizeLimitError("a multiplication table on " + std::to_string(elements.size())
                           + " elements exceeds the limit of "
                           + std::to_string(max_view_elements));
    }
    SemigroupView s;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      detail::check_carrier(g, elements[i]);
      if (!s._index.emplace(elements[i], i).second) {
        throw InputError("subsemigroup_view: element " + std::to_string(i)
                         + " is a duplicate");
      }
    }
    auto const m = elements.size();
    s._elements  = std::move(elements);
    s._labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      s._labels.push_back(std::to_string(i));
    }
    s._table = CayleyTable(m);

    // Column-major, so each right factor's preimage profile is built once.
    std::vector<std::optional<SemigroupView::Escape>> column_escape(m);
    auto fill_columns = [&](std::size_t first, std::size_t step) {
      for (std::size_t j = first; j < m; j += step) {
        auto const hits = detail::preimage_profile(g, s._elements[j]);
        for (std::size_t i = 0; i < m; ++i) {
          auto p  = detail::apply_profile(g.size(), s._elements[i], hits);
          auto it = s._index.find(p);
          if (it != s._index.end()) {
            s._table.at(i, j) = static_cast<std::uint32_t>(it->second);
          } else if (!column_escape[j]) {
            column_escape[j] = SemigroupView::Escape{i, j, std::move(p)};
          }
        }
      }
    };
    workers = std::max<std::size_t>(1, std::min(workers, m));
    if (workers == 1) {
      fill_columns(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(fill_columns, w, workers);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    // First escape in row-major order.
    for (auto& e : column_escape) {
      if (e && (!s._escape || e->left < s._escape->left)) {
        s._escape = std::move(e);
      }
    }
    s._associative = g.is_associative();
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Special elements
  ////////////////////////////////////////////////////////////////////////

  struct SpecialElements {
    std::vector<std::size_t> idempotents;
    std::vector<std::size_t> left_zeros;        // z o x = z for all x
    std::vector<std::size_t> right_zeros;       // x o z = z for all x
    std::vector<std::size_t> zeros;
    std::vector<std::size_t> left_identities;   // u o x = x for all x
    std::vector<std::size_t> right_identities;  // x o u = x for all x
    std::vector<std::size_t> identities;
    std::vector<std::size_t> left_cancelable;   // x -> a o x injective
    std::vector<std::size_t> right_cancelable;  // x -> x o a injective
  };

  inline SpecialElements special_elements(SemigroupView const& s) {
    detail::require_closed(s);
    auto const      m = s.size();
    SpecialElements out;
    ElementSet      seen(m);
    for (std::size_t a = 0; a < m; ++a) {
      bool lz = true, rz = true, li = true, ri = true;
      for (std::size_t x = 0; x < m; ++x) {
        lz = lz && s(a, x) == a;
        rz = rz && s(x, a) == a;
        li = li && s(a, x) == x;
        ri = ri && s(x, a) == x;
      }
      auto injective = [&](auto shift) {
        seen.reset();
        for (std::size_t x = 0; x < m; ++x) {
          auto const y = shift(x);
          if (seen.test(y)) {
            return false;
          }
          seen.set(y);
        }
        return true;
      };
      if (s(a, a) == a) {
        out.idempotents.push_back(a);
      }
      if (lz) {
        out.left_zeros.push_back(a);
      }
      if (rz) {
        out.right_zeros.push_back(a);
      }
      if (lz && rz) {
        out.zeros.push_back(a);
      }
      if (li) {
        out.left_identities.push_back(a);
      }
      if (ri) {
        out.right_identities.push_back(a);
      }
      if (li && ri) {
        out.identities.push_back(a);
      }
      if (injective([&](std::size_t x) { return s(a, x); })) {
        out.left_cancelable.push_back(a);
      }
      if (injective([&](std::size_t x) { return s(x, a); })) {
        out.right_cancelable.push_back(a);
      }
    }
    return out;
  }

  //! All shift-invariant hyperspaces over g, ascending.
  inline std::vector<Hyperspace> shift_invariant_core(Groupoid const& g) {
    return enumerate_class(g, {ClassSpec::Kind::shift_invariant, 0});
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and center
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Smallest set containing x and closed under multiplication by any
    // element on the left (and on the right, if two_sided).
    inline ElementSet generated_ideal(SemigroupView const& s, std::size_t x, bool two_sided) {
      auto const               m = s.size();
      ElementSet               in(m);
      std::vector<std::size_t> queue{x};
      in.set(x);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        auto const y = queue[q];
        for (std::size_t t = 0; t < m; ++t) {
          for (auto z : {s(t, y), two_sided ? s(y, t) : s(t, y)}) {
            if (!in.test(z)) {
              in.set(z);
              queue.push_back(z);
            }
          }
        }
      }
      return in;
    }

    // {x} together with every t o x.  For an associative product this is
    // already the left ideal generated by x.
    inline ElementSet left_principal(SemigroupView const& s, std::size_t x) {
      if (!s.is_associative()) {
        return generated_ideal(s, x, false);
      }
      ElementSet in(s.size());
      in.set(x);
      for (std::size_t t = 0; t < s.size(); ++t) {
        in.set(s(t, x));
      }
      return in;
    }
  }  // namespace detail

  //! The least two-sided ideal (a set closed under multiplication by any
  //! element on either side).  Any two ideals I, J meet, since I o J lies in
  //! both; so starting from one generated ideal and passing to a strictly
  //! smaller ideal generated by one of its elements ends at the least one.
  inline std::vector<std::size_t> minimal_ideal(SemigroupView const& s) {
    detail::require_closed(s);
    if (s.size() == 0) {
      return {};
    }
    auto j       = detail::generated_ideal(s, 0, true);
    bool shrunk  = true;
    while (shrunk) {
      shrunk = false;
      for (auto y = j.find_first(); y != ElementSet::npos; y = j.find_next(y)) {
        auto i = detail::generated_ideal(s, y, true);
        if (i.count() < j.count()) {
          j      = std::move(i);
          shrunk = true;
          break;
        }
      }
    }
    return detail::to_indices(j);
  }

  //! The inclusion-minimal sets among the left ideals generated by single
  //! elements, each ascending, ordered by least element.
  inline std::vector<std::vector<std::size_t>> minimal_left_ideals(SemigroupView const& s) {
    detail::require_closed(s);
    std::vector<ElementSet> all;
    all.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      all.push_back(detail::left_principal(s, x));
    }
    std::sort(all.begin(), all.end(), [](auto const& a, auto const& b) {
      auto const ca = a.count(), cb = b.count();
      return ca != cb ? ca < cb : a < b;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<ElementSet> minimal;
    for (auto const& cand : all) {
      bool has_smaller = false;
      for (auto const& other : all) {
        if (other.count() >= cand.count()) {
          break;
        }
        if (other.is_subset_of(cand)) {
          has_smaller = true;
          break;
        }
      }
      if (!has_smaller) {
        minimal.push_back(cand);
      }
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto const& l : minimal) {
      out.push_back(detail::to_indices(l));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<std::size_t> center(SemigroupView const& s) {
    detail::require_closed(s);
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < s.size(); ++a) {
      bool central = true;
      for (std::size_t x = 0; x < s.size() && central; ++x) {
        central = s(a, x) == s(x, a);
      }
      if (central) {
        out.push_back(a);
      }
    }
    return out;
  }

  //! Center of G(X) for a quasigroup too large to tabulate.  An element
  //! commuting with both min and max must be principal, so only principal
  //! elements are candidates; each is tested against a seeded sample.  The
  //! same sample is scanned for non-principal elements commuting with min and
  //! max, which would contradict that criterion.
  struct CenterByCriterion {
    std::vector<std::size_t> center;  // carrier elements c with <{c}> central
    std::size_t              sample_size = 0;
    std::vector<Hyperspace>  criterion_violations;
  };

  namespace detail {
    inline Hyperspace random_hyperspace(std::size_t n, std::mt19937_64& rng) {
      auto const                                   full = SubsetMask::full(n).bits();
      std::uniform_int_distribution<std::uint32_t> pick(1, full);
      std::uniform_int_distribution<std::size_t>   count(1, 2 * n);
      std::vector<SubsetMask>                      base;
      for (auto k = count(rng); k > 0; --k) {
        base.emplace_back(pick(rng));
      }
      return generate(n, base);
    }
  }  // namespace detail

  inline CenterByCriterion center_by_criterion(Groupoid const& g,
                                               std::size_t     samples = 2000,
                                               std::uint64_t   seed    = 1) {
    if (!g.is_quasigroup()) {
      throw InputError("center_by_criterion needs a quasigroup");
    }
    auto const              n = g.size();
    std::mt19937_64         rng(seed);
    std::vector<Hyperspace> sample{minimum(n), maximum(n)};
    for (std::size_t x = 0; x < n; ++x) {
      sample.push_back(principal(n, x));
    }
    for (std::size_t i = 0; i < samples; ++i) {
      sample.push_back(detail::random_hyperspace(n, rng));
    }
    auto commute = [&](Hyperspace const& a, Hyperspace const& b) {
      return product(g, a, b) == product(g, b, a);
    };
    CenterByCriterion out;
    out.sample_size = sample.size();
    auto const lo = minimum(n), hi = maximum(n);
    for (auto const& f : sample) {
      if (!is_principal(f) && commute(f, lo) && commute(f, hi)) {
        out.criterion_violations.push_back(f);
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto const p       = principal(n, c);
      bool       central = true;
      for (std::size_t i = 0; i < sample.size() && central; ++i) {
        central = commute(p, sample[i]);
      }
      if (central) {
        out.center.push_back(c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits of right shifts by a group, and the quotient
  ////////////////////////////////////////////////////////////////////////

  struct OrbitPartition {
    //! Orbits in order of their least element; each ascending.
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::size_t>              orbit_of;
    //! Quotient on orbits (orbit k has label "o<k>").
    SemigroupView quotient;
  };

  //! Splits a closed view into orbits A o H = {A o <h> : h in H} and builds
  //! the induced table, checking that it does not depend on representatives.
  inline OrbitPartition orbits(Groupoid const& g, SemigroupView const& s) {
    if (!g.is_group()) {
      throw InputError("orbits: '" + g.name() + "' is not a group");
    }
    detail::require_closed(s);
    if (s.elements().empty() && s.size() > 0) {
      throw InputError("orbits: the view has no hyperspaces attached");
    }
    auto const     m = s.size();
    OrbitPartition out;
    out.orbit_of.assign(m, CayleyTable::absent);
    std::vector<Hyperspace> shifts;
    for (std::size_t h = 0; h < g.size(); ++h) {
      shifts.push_back(principal(g, h));
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (out.orbit_of[a] != CayleyTable::absent) {
        continue;
      }
      auto const               id = out.orbits.size();
      std::vector<std::size_t> orbit;
      for (auto const& h : shifts) {
        auto idx = s.index_of(product(g, s.elements()[a], h));
        if (!idx) {
          throw InputError("orbits: the set is not closed under right shifts");
        }
        if (out.orbit_of[*idx] == CayleyTable::absent) {
          out.orbit_of[*idx] = id;
          orbit.push_back(*idx);
        } else if (out.orbit_of[*idx] != id) {
          throw InputError("orbits: right shifts do not partition the set");
        }
      }
      std::sort(orbit.begin(), orbit.end());
      out.orbits.push_back(std::move(orbit));
    }
    auto const               k = out.orbits.size();
    CayleyTable              q(k);
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < k; ++p) {
      labels.push_back("o" + std::to_string(p));
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto const  target = static_cast<std::uint32_t>(out.orbit_of[s(a, b)]);
        auto&       cell   = q.at(out.orbit_of[a], out.orbit_of[b]);
        if (cell == CayleyTable::absent) {
          cell = target;
        } else if (cell != target) {
          throw InputError("orbits: the quotient product is not well defined");
        }
      }
    }
    out.quotient = SemigroupView::from_table(std::move(labels), std::move(q));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sections: sub-semigroups meeting every orbit once
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t default_section_budget = 10'000'000;

  namespace detail {
    // Chooses one element per orbit, smallest orbits first.  Every choice
    // is propagated: a product of chosen elements fixes the choice for its
    // orbit, and clashes prune.
    class SectionSearch {
     public:
      SectionSearch(SemigroupView const& s, OrbitPartition const& p, std::uint64_t budget)
          : _s(s), _p(p), _budget(budget), _choice(p.orbits.size(), CayleyTable::absent) {
        for (std::size_t o = 0; o < p.orbits.size(); ++o) {
          _order.push_back(o);
        }
        std::stable_sort(_order.begin(), _order.end(), [&](auto a, auto b) {
          return p.orbits[a].size() < p.orbits[b].size();
        });
      }

      std::vector<std::vector<std::size_t>> run() {
        recurse(0);
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

      [[nodiscard]] std::uint64_t nodes() const noexcept {
        return _nodes;
      }

     private:
      // Assigns element e to its orbit and closes up.  Returns false on a
      // clash; assignments made are recorded on the trail either way.
      bool assign(std::size_t e) {
        std::vector<std::size_t> queue{e};
        if (!place(e)) {
          return false;
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
          auto const a = queue[q];
          for (auto o : _chosen) {
            auto const b = _choice[o];
            for (auto c : {_s(a, b), _s(b, a)}) {
              auto const oc = _p.orbit_of[c];
              if (_choice[oc] == CayleyTable::absent) {
                place(c);
                queue.push_back(c);
              } else if (_choice[oc] != c) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool place(std::size_t e) {
        auto const o = _p.orbit_of[e];
        if (_choice[o] != CayleyTable::absent) {
          return _choice[o] == e;
        }
        _choice[o] = static_cast<std::uint32_t>(e);
        _chosen.push_back(o);
        return true;
      }

      void undo_to(std::size_t mark) {
        while (_chosen.size() > mark) {
          _choice[_chosen.back()] = CayleyTable::absent;
          _chosen.pop_back();
        }
      }

      void recurse(std::size_t pos) {
        while (pos < _order.size() && _choice[_order[pos]] != CayleyTable::absent) {
          ++pos;
        }
        if (pos == _order.size()) {
          std::vector<std::size_t> t;
          for (auto c : _choice) {
            t.push_back(c);
          }
          std::sort(t.begin(), t.end());
          _found.push_back(std::move(t));
          return;
        }
        for (auto e : _p.orbits[_order[pos]]) {
          if (++_nodes > _budget) {
            throw BudgetExceeded("section search exceeded its budget of "
                                 + std::to_string(_budget) + " nodes");
          }
          auto const mark = _chosen.size();
          if (assign(e)) {
            recurse(pos + 1);
          }
          undo_to(mark);
        }
      }

      SemigroupView const&                  _s;
      OrbitPartition const&                 _p;
      std::uint64_t                         _budget;
      std::uint64_t                         _nodes = 0;
      std::vector<std::uint32_t>            _choice;
      std::vector<std::size_t>              _chosen;
      std::vector<std::size_t>              _order;
      std::vector<std::vector<std::size_t>> _found;
    };
  }  // namespace detail

  //! Every set T of element indices holding exactly one element of each
  //! orbit and closed under the product, in lexicographic order.
  inline std::vector<std::vector<std::size_t>> find_sections(SemigroupView const&  s,
                                                             OrbitPartition const& p,
                                                             std::uint64_t budget
                                                             = default_section_budget) {
    detail::require_closed(s);
    auto found = detail::SectionSearch(s, p, budget).run();
    for (auto const& t : found) {
      ElementSet in(s.size());
      for (auto e : t) {
        in.set(e);
      }
      std::vector<std::size_t> hits(p.orbits.size(), 0);
      for (auto a : t) {
        ++hits[p.orbit_of[a]];
        for (auto b : t) {
          if (!in.test(s(a, b))) {
            throw Error("find_sections: produced a set that is not closed");
          }
        }
      }
      for (auto h : hits) {
        if (h != 1) {
          throw Error("find_sections: produced a set that misses an orbit");
        }
      }
    }
    return found;
  }

  //! The closed view on a subset of a view's elements, in the given order.
  inline SemigroupView restrict_view(Groupoid const&                 g,
                                     SemigroupView const&            s,
                                     std::vector<std::size_t> const& subset) {
    std::vector<Hyperspace> elements;
    for (auto i : subset) {
      elements.push_back(s.elements().at(i));
    }
    return subsemigroup_view(g, std::move(elements));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Label-independent data that an isomorphism must preserve.
    inline std::vector<std::vector<std::size_t>> element_profiles(SemigroupView const& s) {
      auto const                            m = s.size();
      auto const                            sp = special_elements(s);
      std::vector<std::vector<std::size_t>> prof(m);
      auto mark = [&](std::vector<std::size_t> const& list) {
        ElementSet in(m);
        for (auto i : list) {
          in.set(i);
        }
        for (std::size_t i = 0; i < m; ++i) {
          prof[i].push_back(in.test(i) ? 1 : 0);
        }
      };
      mark(sp.idempotents);
      mark(sp.left_zeros);
      mark(sp.right_zeros);
      mark(sp.left_identities);
      mark(sp.right_identities);
      mark(sp.left_cancelable);
      mark(sp.right_cancelable);
      ElementSet seen(m);
      for (std::size_t a = 0; a < m; ++a) {
        // number of distinct right-nested powers a, a o a, a o (a o a), ...
        seen.reset();
        std::size_t p = a, order = 0;
        while (!seen.test(p)) {
          seen.set(p);
          ++order;
          p = s(a, p);
        }
        prof[a].push_back(order);
        seen.reset();
        for (std::size_t x = 0; x < m; ++x) {
          seen.set(s(a, x));
        }
        prof[a].push_back(seen.count());
        seen.reset();
        for (std::size_t x = 0; x < m; ++x) {
          seen.set(s(x, a));
        }
        prof[a].push_back(seen.count());
      }
      return prof;
    }

    class IsoSearch {
     public:
      IsoSearch(SemigroupView const& a, SemigroupView const& b)
          : _a(a),
            _b(b),
            _pa(element_profiles(a)),
            _pb(element_profiles(b)),
            _fwd(a.size(), CayleyTable::absent),
            _bwd(b.size(), CayleyTable::absent) {}

      std::optional<std::vector<std::size_t>> run() {
        if (!search(0)) {
          return std::nullopt;
        }
        return std::vector<std::size_t>(_fwd.begin(), _fwd.end());
      }

     private:
      bool map(std::size_t x, std::size_t y) {
        if (_fwd[x] != CayleyTable::absent || _bwd[y] != CayleyTable::absent) {
          return _fwd[x] == y && _bwd[y] == x;
        }
        if (_pa[x] != _pb[y]) {
          return false;
        }
        _fwd[x] = static_cast<std::uint32_t>(y);
        _bwd[y] = static_cast<std::uint32_t>(x);
        _trail.push_back(x);
        return true;
      }

      // Maps x to y and everything that forces.
      bool assign(std::size_t x, std::size_t y) {
        if (!map(x, y)) {
          return false;
        }
        for (std::size_t q = _trail.size() - 1; q < _trail.size(); ++q) {
          auto const u = _trail[q];
          for (std::size_t i = 0; i < _trail.size(); ++i) {
            auto const v = _trail[i];
            if (!map(_a(u, v), _b(_fwd[u], _fwd[v]))
                || !map(_a(v, u), _b(_fwd[v], _fwd[u]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t x) {
        while (x < _a.size() && _fwd[x] != CayleyTable::absent) {
          ++x;
        }
        if (x == _a.size()) {
          return true;
        }
        for (std::size_t y = 0; y < _b.size(); ++y) {
          if (_bwd[y] != CayleyTable::absent) {
            continue;
          }
          auto const mark = _trail.size();
          if (assign(x, y) && search(x + 1)) {
            return true;
          }
          while (_trail.size() > mark) {
            _bwd[_fwd[_trail.back()]] = CayleyTable::absent;
            _fwd[_trail.back()]       = CayleyTable::absent;
            _trail.pop_back();
          }
        }
        return false;
      }

      SemigroupView const&                  _a;
      SemigroupView const&                  _b;
      std::vector<std::vector<std::size_t>> _pa;
      std::vector<std::vector<std::size_t>> _pb;
      std::vector<std::uint32_t>            _fwd;
      std::vector<std::uint32_t>            _bwd;
      std::vector<std::size_t>              _trail;
    };
  }  // namespace detail

  //! A bijection f with f(x o y) = f(x) o f(y), if one exists.
  inline std::optional<std::vector<std::size_t>> are_isomorphic(SemigroupView const& a,
                                                                SemigroupView const& b) {
    detail::require_closed(a);
    detail::require_closed(b);
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto pa = detail::element_profiles(a);
    auto pb = detail::element_profiles(b);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) {
      return std::nullopt;
    }
    return detail::IsoSearch(a, b).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Right cancelability
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_cancel_brute_force = 4;

  struct RightCancelCertificate {
    //! Y -> Y o F injective over all of G(X) (or over the supplied view).
    bool right_cancelable = false;
    //! The points x o F, x in X, are pairwise distinct.
    bool shifts_distinct = false;
    //! Sets S_x in F n F^perp with the x * S_x pairwise disjoint, if any.
    std::optional<std::vector<SubsetMask>> disjoint_family;
  };

  namespace detail {
    inline bool injective_right(Groupoid const&                g,
                                std::vector<Hyperspace> const& domain,
                                Hyperspace const&              f) {
      std::unordered_map<Hyperspace, std::size_t, HyperspaceHash> seen;
      for (auto const& y : domain) {
        if (!seen.emplace(product(g, y, f), 0).second) {
          return false;
        }
      }
      return true;
    }

    inline bool disjoint_search(Groupoid const&                g,
                                std::vector<SubsetMask> const& candidates,
                                std::size_t                    x,
                                SubsetMask                     used,
                                std::vector<SubsetMask>&       chosen) {
      if (x == g.size()) {
        return true;
      }
      for (auto c : candidates) {
        auto const img = g.image(x, c);
        if (!img.intersects(used)) {
          chosen.push_back(c);
          if (disjoint_search(g, candidates, x + 1, used | img, chosen)) {
            return true;
          }
          chosen.pop_back();
        }
      }
      return false;
    }
  }  // namespace detail

  inline RightCancelCertificate right_cancelable_certificate(Groupoid const&   g,
                                                             Hyperspace const& f,
                                                             SemigroupView const* within
                                                             = nullptr) {
    detail::check_carrier(g, f);
    RightCancelCertificate out;
    if (within != nullptr) {
      out.right_cancelable = detail::injective_right(g, within->elements(), f);
    } else if (g.size() <= max_cancel_brute_force) {
      out.right_cancelable = detail::injective_right(g, enumerate_all(g.size()), f);
    } else {
      throw SizeLimitError("right cancelability by brute force supports carriers up to "
                           + std::to_string(max_cancel_brute_force)
                           + "; supply a sub-semigroup");
    }
    std::vector<Hyperspace> shifts;
    for (std::size_t x = 0; x < g.size(); ++x) {
      shifts.push_back(left_shift(g, x, f));
    }
    std::sort(shifts.begin(), shifts.end());
    out.shifts_distinct = std::adjacent_find(shifts.begin(), shifts.end()) == shifts.end();
    // x * S grows with S, so minimal members of F n F^perp are enough.
    auto                    candidates = minimal_sets(meet(f, transversal(f)));
    std::vector<SubsetMask> chosen;
    if (detail::disjoint_search(g, candidates, 0, SubsetMask(), chosen)) {
      out.disjoint_family = std::move(chosen);
    }
    return out;
  }

}  // namespace ghyper

#endif  // GHYPER_STRUCTURE_HPP_
