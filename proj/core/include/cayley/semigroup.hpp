/*
 * Copyright 2026 The cayleycpp authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Finite semigroups presented by their full multiplication table, together
// with the handful of constructions everything else in the library is built
// from: adjoining an identity or a zero, direct products, Rees quotients,
// monogenic semigroups, and the aperiodicity / nilpotency indices.

#ifndef CAYLEY_SEMIGROUP_HPP_
#define CAYLEY_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exception.hpp"

namespace cayley {

//! Dense element id, 0 .. order - 1.
using element_id = int;

//! Marker for "no element" (quotient map images, optional coordinates, ...).
constexpr element_id UNDEFINED = -1;

//! A word is a sequence of element ids.  Whether the letters come from a
//! semigroup, an input alphabet, or a generator list depends on context and is
//! documented at each use site.
using Word = std::vector<element_id>;

//! A finite semigroup given by its complete multiplication table.
//!
//! The table is row-major: \c product(a, b) is the entry in row \p a and
//! column \p b, i.e. the product a * b.  Construction verifies that every
//! entry is in range and that the operation is associative; the first
//! violating triple is reported via NotAssociativeError.  Instances are
//! immutable after construction and safe to share between threads.
class FiniteSemigroup {
 public:
  //! Validating constructor.
  //!
  //! \param table  row-major multiplication table, table[a][b] = a * b.
  //! \param names  optional display names, one per element.  Missing names
  //!               default to x0, x1, ...  Names must be distinct.
  //! \param name   optional display name for the semigroup itself.
  //!
  //! \throws PreconditionError (OutOfRangeEntry) if the table is empty, not
  //! square, or contains an id outside [0, order).
  //! \throws NotAssociativeError naming the first triple with
  //! (ij)k != i(jk), scanning i, then j, then k in ascending id order.
  explicit FiniteSemigroup(std::vector<std::vector<element_id>> table,
                           std::vector<std::string> names = {},
                           std::string name = "");

  //! The trivial semigroup; lets aggregates hold a semigroup slot that is
  //! filled in later.
  FiniteSemigroup() : FiniteSemigroup({{0}}, {"x0"}, "") {}

  //! Number of elements.
  int order() const noexcept {
    return _order;
  }

  //! The product a * b.
  element_id product(element_id a, element_id b) const {
    return _table[static_cast<std::size_t>(a) * _order + b];
  }

  //! Product of a nonempty word of elements, folded left to right.
  element_id product_of(Word const& w) const;

  //! a^n for n >= 1.
  element_id power(element_id a, int n) const;

  //! The two-sided identity, if one exists.
  std::optional<element_id> identity() const noexcept {
    return _identity;
  }

  //! The two-sided zero, if one exists.
  std::optional<element_id> zero() const noexcept {
    return _zero;
  }

  bool is_monoid() const noexcept {
    return _identity.has_value();
  }

  bool has_zero() const noexcept {
    return _zero.has_value();
  }

  bool is_idempotent(element_id a) const {
    return product(a, a) == a;
  }

  //! Display name of an element.
  std::string const& name_of(element_id a) const {
    return _names.at(static_cast<std::size_t>(a));
  }

  std::vector<std::string> const& names() const noexcept {
    return _names;
  }

  //! Display name of the semigroup ("" if none was given).
  std::string const& name() const noexcept {
    return _name;
  }

  //! Look up an element by display name; UNDEFINED if there is none.
  element_id element_by_name(std::string const& name) const;

  //! The table in row-major nested form (as passed to the constructor).
  std::vector<std::vector<element_id>> rows() const;

  //! Structural equality: same order, same table, same element names.
  friend bool operator==(FiniteSemigroup const& x, FiniteSemigroup const& y) {
    return x._order == y._order && x._table == y._table && x._names == y._names;
  }

 private:
  int _order;
  std::vector<element_id> _table;  // flattened row-major
  std::vector<std::string> _names;
  std::string _name;
  std::optional<element_id> _identity;
  std::optional<element_id> _zero;
};

//! True iff every product s * x and x * s of s in S and x in \p subset stays
//! in \p subset.  The subset must be nonempty.
bool is_ideal(FiniteSemigroup const& s, std::vector<element_id> const& subset);

//! Throws NotAnIdealError with a witness product if the subset is not a
//! two-sided ideal.
void validate_ideal(FiniteSemigroup const& s,
                    std::vector<element_id> const& subset);

//! S^1: the semigroup itself if it is a monoid, otherwise S with a fresh
//! two-sided identity appended after the existing elements (so original ids
//! are preserved).  The new element is named "1" (uniquified on collision).
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

//! S^0: the semigroup itself if it has a zero, otherwise S with a fresh
//! two-sided zero appended after the existing elements.  The new element is
//! named "0" (uniquified on collision).
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

//! S with a fresh two-sided zero appended even when S already has one.  The
//! old zero stops being absorbing; this is what quotient-style constructions
//! on a minimal layer need.
FiniteSemigroup adjoin_zero_always(FiniteSemigroup const& s);

//! The least n >= 1 with s^n = s^(n+1) for every element, or nullopt if some
//! element generates a nontrivial cycle (equivalently: S is not aperiodic).
std::optional<int> aperiodicity_index(FiniteSemigroup const& s);

//! A semigroup is aperiodic iff its aperiodicity index exists.
bool is_aperiodic(FiniteSemigroup const& s);

//! True iff every element is idempotent (a band).
bool is_idempotent_semigroup(FiniteSemigroup const& s);

//! For a semigroup with zero: the least k with S^k = {0}, if S is nilpotent
//! (k is at most order + 1, so the descending chain S >= S^2 >= ... is cut
//! off there).  nullopt if S^k never collapses to {0}.
//!
//! \throws PreconditionError (NoZero) if S has no zero.
std::optional<int> nilpotency_index(FiniteSemigroup const& s);

//! Componentwise product on pairs; (s, t) gets id s * order(t) + t and name
//! "(s,t)".
FiniteSemigroup direct_product(FiniteSemigroup const& s,
                               FiniteSemigroup const& t);

//! Result of a Rees quotient S / I.
struct ReesQuotient {
  //! The quotient: elements of S outside I keep their relative order and get
  //! ids 0, 1, ...; the collapsed ideal becomes the zero, placed last.
  FiniteSemigroup quotient;
  //! Per original element: its image in the quotient.
  std::vector<element_id> map;
  //! Id of the zero of the quotient (the collapsed class).
  element_id zero;
};

//! Collapse a two-sided ideal to a single zero.
//!
//! \throws NotAnIdealError if \p ideal is not an ideal of \p s.
ReesQuotient rees_quotient(FiniteSemigroup const& s,
                           std::vector<element_id> const& ideal);

//! The monogenic semigroup with index \p m and period \p p: elements
//! x, x^2, ..., x^(m+p-1) with x^(m+p) = x^m.  Element x^k has id k - 1 and
//! name "x", "x2", "x3", ...  monogenic(m, 1) is the nil semigroup of
//! nilpotency degree m (x^m is its zero).
//!
//! \throws PreconditionError if m < 1 or p < 1.
FiniteSemigroup monogenic(int m, int p);

}  // namespace cayley

#endif  // CAYLEY_SEMIGROUP_HPP_
