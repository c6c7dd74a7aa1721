#ifndef CAYLEY_DETAIL_SEARCH_HPP
#define CAYLEY_DETAIL_SEARCH_HPP

#include <functional>
#include <span>
#include <vector>

#include "cayley/group.hpp"

namespace cayley::detail {

// Backtracking over images of a generating sequence of `source`.
//
// Level i assigns an image to generators[i] from candidates[i] and extends
// the partial map across <generators[0..i]> by breadth-first search over
// right multiplication. Each edge x -> x*g is checked against f(x)*f(g); a
// clash prunes the branch. When `injective` is set, a partial map that
// sends two elements to the same target is pruned as well. Every edge of the
// Cayley graph is checked by the final level, so the maps handed to `visit`
// are homomorphisms (and bijections when injective and the orders agree).
struct ImageSearch {
  GroupTable const* source = nullptr;
  GroupTable const* target = nullptr;
  std::vector<Elem> generators;
  std::vector<std::vector<Elem>> candidates;
  bool injective = false;
};

// Calls visit for every surviving map in lexicographic order of generator
// images. visit returns false to stop the search early.
void search_images(ImageSearch const& spec,
                   std::function<bool(std::vector<Elem> const&)> const& visit);

}  // namespace cayley::detail

#endif  // CAYLEY_DETAIL_SEARCH_HPP
