#ifndef GHYPER_REFERENCE_HPP_
#define GHYPER_REFERENCE_HPP_

#include <algorithm>  // for sort, find, includes
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <iterator>   // for back_inserter
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "classify.hpp"   // for is_maximal_k_linked, enumerate_class
#include "enumerate.hpp"  // for enumerate_all
#include "groupoid.hpp"   // for build_builtin
#include "product.hpp"    // for product, induced_map
#include "structure.hpp"  // for subsemigroup_view, orbits, find_sections
#include "text.hpp"       // for parse_hyperspace, format_term

// Fixed computations over small cyclic groups with known published answers,
// run end to end from built-in groupoids.

namespace ghyper::reference {

  inline Groupoid z2() {
    return build_builtin("cyclic", 2).renamed("Z2", {"e", "a"});
  }

  inline Groupoid z3() {
    return build_builtin("cyclic", 3).renamed("Z3", {"e", "a", "a⁻¹"});
  }

  //! The 18 elements of G(Z3) as lattice terms over e, a, a⁻¹.
  inline std::vector<std::string> const& z3_terms() {
    static std::vector<std::string> const terms = {
        "a∨e∨a⁻¹",
        "a∨a⁻¹",
        "a∨e",
        "e∨a⁻¹",
        "a∨(e∧a⁻¹)",
        "e∨(a∧a⁻¹)",
        "a⁻¹∨(a∧e)",
        "a",
        "e",
        "a⁻¹",
        "(a∨e)∧(a∨a⁻¹)∧(e∨a⁻¹)",
        "a∧(e∨a⁻¹)",
        "e∧(a∨a⁻¹)",
        "a⁻¹∧(a∨e)",
        "a∧a⁻¹",
        "a∧e",
        "e∧a⁻¹",
        "a∧e∧a⁻¹"};
    return terms;
  }

  //! A linearly ordered chain x_-3 < ... < x_3 in G(Z3), index k + 3.
  inline std::array<std::string, 7> const& chain_terms() {
    static std::array<std::string, 7> const terms = {"e∧a∧a⁻¹",
                                                     "e∧a",
                                                     "e∧(a∨a⁻¹)",
                                                     "(e∨a)∧(e∨a⁻¹)∧(a∨a⁻¹)",
                                                     "e∨(a∧a⁻¹)",
                                                     "e∨a",
                                                     "e∨a∨a⁻¹"};
    return terms;
  }

  //! Published multiplication table of the chain, entries as k + 3.
  inline std::array<std::array<int, 7>, 7> const& chain_table() {
    static std::array<std::array<int, 7>, 7> const table = {{
        {0, 0, 0, 3, 3, 3, 6},
        {0, 0, 1, 3, 3, 4, 6},
        {0, 0, 2, 3, 3, 5, 6},
        {0, 0, 3, 3, 3, 6, 6},
        {0, 1, 3, 3, 4, 6, 6},
        {0, 2, 3, 3, 5, 6, 6},
        {0, 3, 3, 3, 6, 6, 6},
    }};
    return table;
  }

  inline std::string chain_name(std::size_t i) {
    return "x" + std::to_string(static_cast<int>(i) - 3);
  }

  //! The maximal 3-linked family over Z5 whose square is not maximal.
  inline std::string const& z5_three_linked() {
    static std::string const s = "<[0,1,2],[0,1,4],[0,2,4],[1,2,4]>";
    return s;
  }

  //! Published base of its square, verbatim (one set names an element 5).
  inline std::vector<std::vector<int>> const& z5_square_published() {
    static std::vector<std::vector<int>> const base = {
        {1, 2, 4, 5}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
    return base;
  }

  ////////////////////////////////////////////////////////////////////////
  // Chain table comparison
  ////////////////////////////////////////////////////////////////////////

  struct ChainTableComparison {
    //! Entries where the product of the terms is the listed term.
    std::size_t literal_matches = 0;
    //! Entries where it lies in the orbit of the listed term.
    std::size_t orbit_matches = 0;
    //! Literal matches after replacing x2 by e∨a⁻¹.
    std::size_t corrected_matches = 0;
    //! (row, column, computed term) for each literal mismatch.
    struct Mismatch {
      std::size_t row, column;
      std::string computed;
    };
    std::vector<Mismatch> mismatches;
  };

  inline ChainTableComparison compare_chain_table() {
    auto const g   = z3();
    auto const all = enumerate_all(3);
    auto const s   = subsemigroup_view(g, all);
    auto const p   = orbits(g, s);
    auto       literal = [&](std::array<std::string, 7> const& terms, auto&& on_entry) {
      std::vector<Hyperspace> x;
      for (auto const& t : terms) {
        x.push_back(parse_hyperspace(g, t));
      }
      for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
          auto const expected = x[static_cast<std::size_t>(chain_table()[i][j])];
          on_entry(i, j, product(g, x[i], x[j]), expected);
        }
      }
    };
    ChainTableComparison out;
    literal(chain_terms(), [&](auto i, auto j, Hyperspace const& got, Hyperspace const& want) {
      if (got == want) {
        ++out.literal_matches;
      } else {
        out.mismatches.push_back({i, j, format_term(g, got)});
      }
      if (p.orbit_of[*s.index_of(got)] == p.orbit_of[*s.index_of(want)]) {
        ++out.orbit_matches;
      }
    });
    auto corrected = chain_terms();
    corrected[5]   = "e∨a⁻¹";
    literal(corrected, [&](auto, auto, Hyperspace const& got, Hyperspace const& want) {
      out.corrected_matches += got == want ? 1 : 0;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The check suite
  ////////////////////////////////////////////////////////////////////////

  struct Check {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  namespace detail {
    inline std::string join_terms(Groupoid const&                 g,
                                  SemigroupView const&            s,
                                  std::vector<std::size_t> const& idx) {
      std::string out;
      for (auto i : idx) {
        out += (out.empty() ? "" : ", ") + format_term(g, s.elements()[i]);
      }
      return "{" + out + "}";
    }

    inline std::vector<std::size_t> indices_of(Groupoid const&                 g,
                                               SemigroupView const&            s,
                                               std::vector<std::string> const& terms) {
      std::vector<std::size_t> out;
      for (auto const& t : terms) {
        out.push_back(*s.index_of(parse_hyperspace(g, t)));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  inline std::vector<Check> run_checks(std::uint64_t budget  = default_section_budget,
                                       std::size_t   workers = 1) {
    std::vector<Check> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
      out.push_back({std::move(name), ok, std::move(detail)});
    };

    // G(Z2)
    {
      auto const g    = z2();
      auto const s    = subsemigroup_view(g, enumerate_all(2), workers);
      auto const p    = orbits(g, s);
      auto const secs = find_sections(s, p, budget);
      auto const sp   = special_elements(s);
      add("G(Z2) has 4 elements", s.size() == 4, std::to_string(s.size()) + " elements");
      auto const want = detail::indices_of(g, s, {"e∧a", "e", "e∨a"});
      add("G(Z2) has the single transversal semigroup {e∧a, e, e∨a}",
          secs.size() == 1 && secs.front() == want,
          std::to_string(secs.size()) + " found"
              + (secs.empty() ? "" : ", first " + detail::join_terms(g, s, secs.front())));
      add("G(Z2) has right zeros e∧a, e∨a and unit e",
          sp.right_zeros == detail::indices_of(g, s, {"e∧a", "e∨a"})
              && sp.identities == detail::indices_of(g, s, {"e"}),
          "right zeros " + detail::join_terms(g, s, sp.right_zeros) + ", units "
              + detail::join_terms(g, s, sp.identities));
    }

    // G(Z3)
    {
      auto const g    = z3();
      auto const s    = subsemigroup_view(g, enumerate_all(3), workers);
      auto const p    = orbits(g, s);
      auto const secs = find_sections(s, p, budget);
      auto const sp   = special_elements(s);

      std::vector<std::size_t> listed;
      for (auto const& t : z3_terms()) {
        listed.push_back(*s.index_of(parse_hyperspace(g, t)));
      }
      std::sort(listed.begin(), listed.end());
      listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
      add("G(Z3) has 18 elements, exactly the listed terms",
          s.size() == 18 && listed.size() == 18,
          std::to_string(s.size()) + " enumerated, " + std::to_string(listed.size())
              + " distinct listed");
      add("G(Z3) splits into 8 orbits", p.orbits.size() == 8,
          std::to_string(p.orbits.size()) + " orbits");
      add("G(Z3) has 9 transversal semigroups", secs.size() == 9,
          std::to_string(secs.size()) + " found");
      bool iso = !secs.empty();
      for (auto const& t : secs) {
        iso = iso && are_isomorphic(restrict_view(g, s, t), p.quotient).has_value();
      }
      add("every transversal semigroup of G(Z3) is isomorphic to the quotient", iso,
          std::to_string(secs.size()) + " checked");
      auto const core = detail::indices_of(
          g, s, {"a∧e∧a⁻¹", "a∨e∨a⁻¹", "(a∨e)∧(e∨a⁻¹)∧(a∨a⁻¹)"});
      std::vector<std::size_t> shift_inv;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_shift_invariant(s.elements()[i], g)) {
          shift_inv.push_back(i);
        }
      }
      add("G(Z3) right zeros are the 3 shift-invariant elements",
          sp.right_zeros == core && shift_inv == core,
          "right zeros " + detail::join_terms(g, s, sp.right_zeros));
      std::vector<std::size_t> other_idem;
      std::set_difference(sp.idempotents.begin(), sp.idempotents.end(),
                          sp.right_zeros.begin(), sp.right_zeros.end(),
                          std::back_inserter(other_idem));
      add("G(Z3) has idempotents e, e∨(a∧a⁻¹), e∧(a∨a⁻¹) besides right zeros, unit e",
          other_idem == detail::indices_of(g, s, {"e", "e∨(a∧a⁻¹)", "e∧(a∨a⁻¹)"})
              && sp.identities == detail::indices_of(g, s, {"e"}),
          "other idempotents " + detail::join_terms(g, s, other_idem));
      add("G(Z3) minimal ideal is the shift-invariant core", minimal_ideal(s) == core,
          detail::join_terms(g, s, minimal_ideal(s)));

      auto const cmp = compare_chain_table();
      std::string detail = std::to_string(cmp.literal_matches) + "/49 entries match";
      for (auto const& m : cmp.mismatches) {
        detail += "; " + chain_name(m.row) + "∘" + chain_name(m.column) + " = " + m.computed;
      }
      detail += "; up to orbit " + std::to_string(cmp.orbit_matches) + "/49"
                + "; with x2 = e∨a⁻¹ " + std::to_string(cmp.corrected_matches) + "/49";
      add("chain x-3..x3 multiplies as tabulated", cmp.literal_matches == 49, detail);
    }

    // Z5: a maximal 3-linked family with a non-maximal square
    {
      auto const g      = build_builtin("cyclic", 5);
      auto const l      = parse_hyperspace(g, z5_three_linked());
      auto const square = product(g, l, l);
      add("L over Z5 is maximal 3-linked", is_maximal_k_linked(l, 3), format_literal(g, l));
      std::string diff;
      std::vector<SubsetMask> published;
      for (auto const& set : z5_square_published()) {
        std::uint32_t bits = 0;
        bool          ok   = true;
        for (int e : set) {
          ok = ok && e < 5;
          bits |= std::uint32_t{1} << (e % 32);
        }
        if (!ok) {
          diff += "; published set {";
          for (std::size_t k = 0; k < set.size(); ++k) {
            diff += (k ? "," : "") + std::to_string(set[k]);
          }
          diff += "} is not a subset of Z5";
          continue;
        }
        published.emplace_back(bits);
      }
      for (auto m : minimal_sets(square)) {
        if (std::find(published.begin(), published.end(), m) == published.end()) {
          diff += "; computed " + format_subset(g, m) + " is not listed";
        }
      }
      add("L∘L over Z5 is 3-linked but not maximal 3-linked",
          is_k_linked(square, 3) && !is_maximal_k_linked(square, 3),
          format_literal(g, square) + diff);
    }

    // Maximal linked families over Z3 and Z6
    {
      auto const g   = build_builtin("cyclic", 3);
      auto const lam = enumerate_class(g, parse_class("maxlinked:2"));
      auto const s   = subsemigroup_view(g, lam, workers);
      auto const z   = s.index_of(parse_hyperspace(g, "<[0,1],[0,2],[1,2]>"));
      auto const sp  = special_elements(s);
      add("λ(Z3) has 4 elements with zero <[0,1],[0,2],[1,2]>",
          s.size() == 4 && s.closed() && z && sp.zeros == std::vector<std::size_t>{*z},
          std::to_string(s.size()) + " elements, " + std::to_string(sp.zeros.size())
              + " zeros");

      auto const g6    = build_builtin("cyclic", 6);
      auto const lam6  = enumerate_class(g6, parse_class("maxlinked:2"));
      auto const s6    = subsemigroup_view(g6, lam6, workers);
      auto const ideals = minimal_left_ideals(s6);
      std::array<std::size_t, 6> mod3{0, 1, 2, 0, 1, 2};
      bool disjoint = s6.closed() && !ideals.empty();
      bool onto_zero = true;
      for (auto const& ideal : ideals) {
        for (auto i : ideal) {
          disjoint  = disjoint && !is_principal(s6.elements()[i]);
          onto_zero = onto_zero
                      && induced_map(mod3, g6, g, s6.elements()[i])
                             == parse_hyperspace(g, "<[0,1],[0,2],[1,2]>");
        }
      }
      add("minimal left ideals of λ(Z6) contain no ultrafilter", disjoint && onto_zero,
          std::to_string(lam6.size()) + " elements, " + std::to_string(ideals.size())
              + " minimal left ideals");
    }

    // λ(Z5) does not split
    {
      auto const g    = build_builtin("cyclic", 5);
      auto const s    = subsemigroup_view(g, enumerate_class(g, parse_class("maxlinked:2")),
                                          workers);
      auto const p    = orbits(g, s);
      auto const secs = find_sections(s, p, budget);
      add("λ(Z5) has no transversal semigroup", secs.empty(),
          std::to_string(s.size()) + " elements, " + std::to_string(p.orbits.size())
              + " orbits, " + std::to_string(secs.size()) + " sections");
    }
    return out;
  }

}  // namespace ghyper::reference

#endif  // GHYPER_REFERENCE_HPP_
