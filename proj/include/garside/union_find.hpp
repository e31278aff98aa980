#ifndef GARSIDE_UNION_FIND_HPP_
#define GARSIDE_UNION_FIND_HPP_

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace garside {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns false if x and y were already in the same block.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      return true;
    }

    bool same(std::size_t x, std::size_t y) {
      return find(x) == find(y);
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

}  // namespace garside

#endif  // GARSIDE_UNION_FIND_HPP_
