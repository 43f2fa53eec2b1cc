#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramal/algebra.hpp"
#include "ramal/error.hpp"

inline ramal::FiniteAlgebra cyclic_add(int k) {
  ramal::Operation add{"add", 2, std::vector<int>(
                                     static_cast<std::size_t>(k) *
                                     static_cast<std::size_t>(k))};
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      add.table[static_cast<std::size_t>(a * k + b)] = (a + b) % k;
  return {k, {add}};
}

inline ramal::FiniteAlgebra cyclic_ring(int k) {
  ramal::FiniteAlgebra alg = cyclic_add(k);
  ramal::Operation mul{"mul", 2, std::vector<int>(
                                     static_cast<std::size_t>(k) *
                                     static_cast<std::size_t>(k))};
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mul.table[static_cast<std::size_t>(a * k + b)] = (a * b) % k;
  alg.ops.push_back(mul);
  return alg;
}

inline ramal::FiniteAlgebra unary_algebra(std::vector<int> table,
                                          std::string name = "f") {
  int n = static_cast<int>(table.size());
  return {n, {ramal::Operation{std::move(name), 1, std::move(table)}}};
}

// Runs f, which must raise, and hands back the kind it raised with.
template <class F>
ramal::ErrorKind kind_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const ramal::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected the call to raise");
}
