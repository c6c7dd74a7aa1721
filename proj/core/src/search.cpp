#include "cayley/detail/search.hpp"

#include <stdexcept>

namespace cayley::detail {

namespace {

constexpr Elem unset = ~Elem{0};

struct State {
  std::vector<Elem> image;
  std::vector<char> used;
  std::vector<Elem> domain;  // elements where image is defined, BFS order
};

class Searcher {
 public:
  Searcher(ImageSearch const& spec,
           std::function<bool(std::vector<Elem> const&)> const& visit)
      : spec_(spec), visit_(visit), gen_images_(spec.generators.size(), 0) {}

  void run() {
    auto const& src = *spec_.source;
    auto const& dst = *spec_.target;
    State root;
    root.image.assign(src.order(), unset);
    root.used.assign(dst.order(), 0);
    root.image[src.identity()] = dst.identity();
    root.used[dst.identity()] = 1;
    root.domain.push_back(src.identity());
    descend(0, root);
  }

 private:
  // Returns false when the visitor asked to stop.
  bool descend(std::size_t level, State const& state) {
    if (level == spec_.generators.size()) {
      return visit_(state.image);
    }
    Elem const g = spec_.generators[level];
    for (Elem y : spec_.candidates[level]) {
      if (state.image[g] != unset && state.image[g] != y) {
        continue;
      }
      gen_images_[level] = y;
      State next = state;
      if (!extend(level, next)) {
        continue;
      }
      if (!descend(level + 1, next)) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t level, State& state) const {
    auto const& src = *spec_.source;
    auto const& dst = *spec_.target;
    for (std::size_t i = 0; i < state.domain.size(); ++i) {
      Elem const x = state.domain[i];
      Elem const fx = state.image[x];
      for (std::size_t j = 0; j <= level; ++j) {
        Elem const z = src.mul(x, spec_.generators[j]);
        Elem const w = dst.mul(fx, gen_images_[j]);
        if (state.image[z] == unset) {
          if (spec_.injective && state.used[w]) {
            return false;
          }
          state.image[z] = w;
          state.used[w] = 1;
          state.domain.push_back(z);
        } else if (state.image[z] != w) {
          return false;
        }
      }
    }
    return true;
  }

  ImageSearch const& spec_;
  std::function<bool(std::vector<Elem> const&)> const& visit_;
  std::vector<Elem> gen_images_;
};

}  // namespace

void search_images(ImageSearch const& spec,
                   std::function<bool(std::vector<Elem> const&)> const& visit) {
  if (spec.source == nullptr || spec.target == nullptr ||
      spec.candidates.size() != spec.generators.size()) {
    throw std::invalid_argument("search_images: malformed search specification");
  }
  Searcher(spec, visit).run();
}

}  // namespace cayley::detail
