#ifndef GHYPER_CLASSIFY_HPP_
#define GHYPER_CLASSIFY_HPP_

#include <algorithm>    // for sort, all_of
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <string>       // for string, to_string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "bits.hpp"        // for SubsetMask, detail::Words
#include "enumerate.hpp"   // for for_each_hyperspace, for_each_linked_hyperspace
#include "errors.hpp"      // for InputError, SizeLimitError
#include "groupoid.hpp"    // for Groupoid
#include "hyperspace.hpp"  // for Hyperspace, minimal_sets, transversal

namespace ghyper {

  namespace detail {

    // All intersections of at most k minimal sets (k >= 1), as a 2^n-bit set.
    // A family is k-linked iff the empty set is not among them.
    inline Words intersections_up_to(std::vector<SubsetMask> const& mins,
                                     std::size_t                    n,
                                     std::size_t                    k) {
      auto reach = zero_words(n);
      for (auto m : mins) {
        set(reach, m.bits());
      }
      for (std::size_t level = 2; level <= k; ++level) {
        auto next = reach;
        for_each_set(reach, [&](std::uint32_t r) {
          for (auto m : mins) {
            set(next, r & m.bits());
          }
        });
        if (next == reach) {
          break;
        }
        reach = std::move(next);
      }
      return reach;
    }

    // Could A be added to a k-linked family with these minimal sets without
    // breaking k-linkedness?  Yes iff A meets every intersection of at most
    // k - 1 of them.
    inline bool extends_linked(SubsetMask a, Words const& smaller_intersections) {
      bool ok = true;
      for_each_set(smaller_intersections, [&](std::uint32_t r) {
        ok = ok && (r & a.bits()) != 0;
      });
      return ok;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  //! Any k members (k >= 1) have a common point.  Checked on minimal sets:
  //! any k members contain k minimal members.
  inline bool is_k_linked(Hyperspace const& f, std::size_t k) {
    if (k == 0) {
      return true;
    }
    auto const r = detail::intersections_up_to(minimal_sets(f), f.carrier_size(), k);
    return !detail::test(r, 0);
  }

  inline bool is_centered(Hyperspace const& f) {
    auto common = SubsetMask::full(f.carrier_size());
    for (auto m : minimal_sets(f)) {
      common = common & m;
    }
    return !common.empty();
  }

  //! A1, A2 in F implies A1 n A2 in F.  Enough to test minimal sets.
  inline bool is_filter(Hyperspace const& f) {
    auto const mins = minimal_sets(f);
    for (auto a : mins) {
      for (auto b : mins) {
        if (!f.contains(a & b)) {
          return false;
        }
      }
    }
    return true;
  }

  //! A maximal filter: no single added set yields a larger filter.
  inline bool is_ultrafilter(Hyperspace const& f) {
    if (!is_filter(f)) {
      return false;
    }
    auto const n    = f.carrier_size();
    auto const full = SubsetMask::full(n).bits();
    for (std::uint32_t a = 1; a <= full; ++a) {
      if (f.contains(SubsetMask(a))) {
        continue;
      }
      auto words = detail::Words(f.words().begin(), f.words().end());
      detail::set(words, a);
      detail::upclose(words, n);
      if (is_filter(detail::make_hyperspace(n, std::move(words)))) {
        return false;
      }
    }
    return true;
  }

  //! k-linked and no set outside F can be added keeping it k-linked.  Adding
  //! sets one at a time is enough: if F is strictly inside a k-linked F',
  //! then F together with any member of F' missing from F is k-linked too.
  inline bool is_maximal_k_linked(Hyperspace const& f, std::size_t k) {
    if (k < 2) {
      throw InputError("maximal k-linkedness needs k >= 2");
    }
    auto const n    = f.carrier_size();
    auto const mins = minimal_sets(f);
    if (detail::test(detail::intersections_up_to(mins, n, k), 0)) {
      return false;
    }
    auto const smaller = detail::intersections_up_to(mins, n, k - 1);
    auto const full    = SubsetMask::full(n).bits();
    for (std::uint32_t a = 1; a <= full; ++a) {
      if (!f.contains(SubsetMask(a)) && detail::extends_linked(SubsetMask(a), smaller)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_self_transversal(Hyperspace const& f) {
    return f == transversal(f);
  }

  //! x * A and x^{-1}A belong to F for all A in F and all x.  Both shifts are
  //! monotone in A, so minimal sets suffice.
  inline bool is_shift_invariant(Hyperspace const& f, Groupoid const& g) {
    if (f.carrier_size() != g.size()) {
      throw InputError("shift invariance: carrier mismatch");
    }
    for (auto a : minimal_sets(f)) {
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (!f.contains(g.image(x, a)) || !f.contains(g.preimage(x, a))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // ClassFlags
  ////////////////////////////////////////////////////////////////////////

  struct ClassFlags {
    //! Largest k <= n such that F is k-linked (at least 1).
    std::size_t linked_up_to = 1;
    bool        centered     = false;
    bool        filter       = false;
    bool        ultrafilter  = false;
    //! Indexed by k; meaningful for k in [2, n], false elsewhere.
    std::vector<bool>   maximal_k_linked;
    bool                self_transversal = false;
    std::optional<bool> shift_invariant;

    [[nodiscard]] bool is_k_linked(std::size_t k) const noexcept {
      return k <= linked_up_to || centered;
    }
    [[nodiscard]] bool is_maximal_k_linked(std::size_t k) const noexcept {
      return k < maximal_k_linked.size() && maximal_k_linked[k];
    }
  };

  inline ClassFlags classify(Hyperspace const& f) {
    ClassFlags flags;
    auto const n    = f.carrier_size();
    auto const mins = minimal_sets(f);
    for (std::size_t k = 2; k <= n; ++k) {
      if (detail::test(detail::intersections_up_to(mins, n, k), 0)) {
        break;
      }
      flags.linked_up_to = k;
    }
    flags.centered    = is_centered(f);
    flags.filter      = is_filter(f);
    flags.ultrafilter = flags.filter && is_ultrafilter(f);
    flags.maximal_k_linked.assign(n + 1, false);
    for (std::size_t k = 2; k <= n; ++k) {
      flags.maximal_k_linked[k] = is_maximal_k_linked(f, k);
    }
    flags.self_transversal = is_self_transversal(f);
    return flags;
  }

  inline ClassFlags classify(Hyperspace const& f, Groupoid const& g) {
    auto flags            = classify(f);
    flags.shift_invariant = is_shift_invariant(f, g);
    return flags;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes and their enumeration
  ////////////////////////////////////////////////////////////////////////

  struct ClassSpec {
    enum class Kind {
      all,
      filters,
      ultrafilters,
      linked,
      centered,
      maximal_linked,
      shift_invariant
    };
    Kind        kind = Kind::all;
    std::size_t k    = 0;  // for linked and maximal_linked

    friend bool operator==(ClassSpec const&, ClassSpec const&) = default;
  };

  //! all|filters|ultrafilters|linked:k|centered|maxlinked:k|shiftinv
  inline ClassSpec parse_class(std::string_view token) {
    using Kind = ClassSpec::Kind;
    auto with_k = [&](std::string_view prefix, Kind kind) -> std::optional<ClassSpec> {
      if (token.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
      }
      auto const  digits = token.substr(prefix.size());
      std::size_t k      = 0;
      if (digits.empty() || digits.size() > 2) {
        throw InputError("class '" + std::string(token) + "' needs a numeric k");
      }
      for (char c : digits) {
        if (c < '0' || c > '9') {
          throw InputError("class '" + std::string(token) + "' needs a numeric k");
        }
        k = k * 10 + static_cast<std::size_t>(c - '0');
      }
      if (k < 2) {
        throw InputError("class '" + std::string(token) + "' needs k >= 2");
      }
      return ClassSpec{kind, k};
    };
    if (token == "all") {
      return {Kind::all, 0};
    }
    if (token == "filters") {
      return {Kind::filters, 0};
    }
    if (token == "ultrafilters") {
      return {Kind::ultrafilters, 0};
    }
    if (token == "centered") {
      return {Kind::centered, 0};
    }
    if (token == "shiftinv") {
      return {Kind::shift_invariant, 0};
    }
    if (auto c = with_k("linked:", Kind::linked)) {
      return *c;
    }
    if (auto c = with_k("maxlinked:", Kind::maximal_linked)) {
      return *c;
    }
    throw InputError("unknown class '" + std::string(token) + "'");
  }

  inline std::string to_string(ClassSpec const& c) {
    using Kind = ClassSpec::Kind;
    switch (c.kind) {
      case Kind::all:
        return "all";
      case Kind::filters:
        return "filters";
      case Kind::ultrafilters:
        return "ultrafilters";
      case Kind::linked:
        return "linked:" + std::to_string(c.k);
      case Kind::centered:
        return "centered";
      case Kind::maximal_linked:
        return "maxlinked:" + std::to_string(c.k);
      case Kind::shift_invariant:
        return "shiftinv";
    }
    return "?";
  }

  //! Does F belong to the class?  (Shift invariance is relative to g.)
  inline bool in_class(Hyperspace const& f, ClassSpec const& c, Groupoid const& g) {
    using Kind = ClassSpec::Kind;
    switch (c.kind) {
      case Kind::all:
        return true;
      case Kind::filters:
        return is_filter(f);
      case Kind::ultrafilters:
        return is_ultrafilter(f);
      case Kind::linked:
        return is_k_linked(f, c.k);
      case Kind::centered:
        return is_centered(f);
      case Kind::maximal_linked:
        return is_maximal_k_linked(f, c.k);
      case Kind::shift_invariant:
        return is_shift_invariant(f, g);
    }
    return false;
  }

  //! Streams the members of a class over the carrier of g, ascending.
  //!
  //! Filters are the <A>, A non-empty (every filter on a finite set is
  //! principal in that sense); ultrafilters are the <{x}>.  Maximal k-linked
  //! families are filtered out of the k-linked census, which is itself cut
  //! from the 2-linked search.  Everything else filters the full census.
  template <typename Visit>
  void for_each_in_class(Groupoid const& g, ClassSpec const& c, Visit&& visit) {
    using Kind   = ClassSpec::Kind;
    auto const n = g.size();
    detail::check_enumeration_carrier(n);
    if (c.kind == Kind::maximal_linked && c.k >= 3 && n > 5) {
      throw SizeLimitError("maxlinked:k with k >= 3 supports carriers up to 5");
    }
    switch (c.kind) {
      case Kind::filters:
      case Kind::ultrafilters: {
        std::vector<Hyperspace> out;
        auto const              full = SubsetMask::full(n).bits();
        for (std::uint32_t a = 1; a <= full; ++a) {
          if (c.kind == Kind::filters || SubsetMask(a).size() == 1) {
            out.push_back(generate(n, {SubsetMask(a)}));
          }
        }
        std::sort(out.begin(), out.end());
        for (auto const& h : out) {
          visit(h);
        }
        return;
      }
      case Kind::linked:
      case Kind::centered:
      case Kind::maximal_linked:
        for_each_linked_hyperspace(n, [&](Hyperspace const& h) {
          if (in_class(h, c, g)) {
            visit(h);
          }
        });
        return;
      case Kind::all:
        for_each_hyperspace(n, visit);
        return;
      case Kind::shift_invariant:
        for_each_hyperspace(n, [&](Hyperspace const& h) {
          if (is_shift_invariant(h, g)) {
            visit(h);
          }
        });
        return;
    }
  }

  inline std::vector<Hyperspace> enumerate_class(Groupoid const& g, ClassSpec const& c) {
    std::vector<Hyperspace> out;
    for_each_in_class(g, c, [&](Hyperspace const& h) { out.push_back(h); });
    return out;
  }

}  // namespace ghyper

#endif  // GHYPER_CLASSIFY_HPP_
