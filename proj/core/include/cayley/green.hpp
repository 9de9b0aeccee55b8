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

// Green's relations R, L and J from principal ideals, the J-class order and a
// principal series, Rees coordinates (A, B, C) for J-classes of aperiodic
// semigroups, the structure matrix extended over all of S with the induced
// left action on row coordinates, and the trace semigroup of a J-class.

#ifndef CAYLEY_GREEN_HPP_
#define CAYLEY_GREEN_HPP_

#include <string>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace cayley {

//! The R-, L- and J-class partitions of a finite semigroup together with the
//! partial order on J-classes.  Class indices are assigned in ascending order
//! of each class's least element id, so everything here is deterministic.
struct GreenStructure {
  std::vector<int> r_class_of;  // element -> R-class index
  std::vector<int> l_class_of;
  std::vector<int> j_class_of;
  std::vector<std::vector<element_id>> r_classes;  // each sorted ascending
  std::vector<std::vector<element_id>> l_classes;
  std::vector<std::vector<element_id>> j_classes;
  //! j_below[p][q] is true iff J_p is strictly below J_q in the J-order
  //! (principal two-sided ideal of p strictly contained in that of q).
  std::vector<std::vector<bool>> j_below;
  //! Per J-class: does it contain an idempotent (equivalently, is regular)?
  std::vector<bool> j_regular;
  //! J-class indices in a linear extension of the J-order, minimal classes
  //! first; every prefix union is an ideal.  Ties broken by least element id.
  std::vector<int> principal_series;
};

//! Compute the full Green structure from the multiplication table, via the
//! principal right / left / two-sided ideals xS^1, S^1x, S^1xS^1.
GreenStructure green(FiniteSemigroup const& s);

//! For a semigroup with zero: the J-classes J != {0} such that J + {0} is an
//! ideal (necessarily 0-minimal).  Returns (J-class index, regular?) pairs in
//! class index order.
//!
//! \throws PreconditionError (NoZero) if S has no zero.
std::vector<std::pair<int, bool>> zero_minimal_ideals(
    FiniteSemigroup const& s, GreenStructure const& g);

//! Rees coordinates of one J-class of an aperiodic semigroup.
//!
//! Rows A are the R-classes of J and columns B the L-classes, both ordered by
//! least element id; since H-classes are trivial every element of J has a
//! unique coordinate pair (a, b).  c_matrix[b][a] records whether the product
//! of an element in column b with an element in row a stays inside J.  For a
//! non-regular J-class products never stay in J; the matrix is then all zero
//! and is_null is set.
struct ReesData {
  int j_class;                                  // index into GreenStructure
  std::vector<std::vector<element_id>> a_rows;  // R-classes, elements sorted
  std::vector<std::vector<element_id>> b_cols;  // L-classes, elements sorted
  std::vector<std::vector<int>> c_matrix;       // |B| x |A| over {0, 1}
  std::vector<std::pair<int, int>> coords;      // element -> (a, b); (-1,-1)
                                                // for elements outside J
  bool is_null;
};

//! \throws PreconditionError (NotAperiodic) if S is not aperiodic.
ReesData rees_coordinates(FiniteSemigroup const& s, GreenStructure const& g,
                          int j_class);

//! The structure matrix extended over all of S, and the left action of S on
//! the row coordinates A + {0} that it induces.
struct ExtendedMatrix {
  //! c_ext[s][a] = 1 iff s * (element in row a) stays in J.  Restricted to
  //! the rows' representatives this reproduces c_matrix transposed.
  std::vector<std::vector<int>> c_ext;  // |S| x |A|
  //! left_action[s][a] = the row index of s * (element of row a) when the
  //! product stays in J, else UNDEFINED (the killed coordinate "0").
  //! Well-definedness (independence of the chosen element of row a) is
  //! verified during construction.
  std::vector<std::vector<int>> left_action;  // |S| x |A|
};

//! \throws PreconditionError (InconsistentAction) if two elements of the same
//! R-class disagree about where a left multiplier sends the row (cannot
//! happen for genuine Rees coordinates; the check guards table corruption).
ExtendedMatrix extended_matrix(FiniteSemigroup const& s,
                               GreenStructure const& g, ReesData const& rd);

//! The trace of a J-class: elements J + {theta}, with x * y kept when the
//! product stays in J and sent to theta otherwise.  Elements of J keep their
//! relative order and get ids 0, 1, ...; theta is last and is the zero.
struct TraceSemigroup {
  FiniteSemigroup semigroup;
  std::vector<element_id> element_of;  // trace id -> original id; theta ->
                                       // UNDEFINED
  std::vector<element_id> trace_id_of;  // original id -> trace id or UNDEFINED
  element_id theta;
};

TraceSemigroup trace_of_j_class(FiniteSemigroup const& s,
                                GreenStructure const& g, int j_class);

//! Egg-box picture of every J-class, highest classes first: one grid per
//! J-class with R-classes as rows and L-classes as columns; idempotents are
//! starred.
std::string eggbox_text(FiniteSemigroup const& s, GreenStructure const& g);

//! The 0/1 structure matrix of one J-class as text, rows = B, columns = A.
std::string structure_matrix_text(FiniteSemigroup const& s,
                                  ReesData const& rd);

}  // namespace cayley

#endif  // CAYLEY_GREEN_HPP_
