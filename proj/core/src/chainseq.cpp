#include "ricopoly/chainseq.hpp"

namespace ricopoly {

std::vector<Polynomial<std::complex<double>>> r_polynomials(const std::function<double(int)>& beta,
                                                            const ChainSequence<double>& chain, int N) {
  using C = std::complex<double>;
  auto linear_factor = [&beta](int n) {
    const C ib(0.0, beta(n));
    return Polynomial<C>(std::vector<C>{C(1.0) - ib, C(1.0) + ib});  // (1+ib) z + (1-ib)
  };
  std::vector<Polynomial<C>> r;
  r.reserve(static_cast<size_t>(N) + 1);
  r.push_back(Polynomial<C>::one());
  if (N == 0) return r;
  r.push_back(linear_factor(1));
  const Polynomial<C> zpoly = Polynomial<C>::x();
  for (int n = 1; n < N; ++n) {
    Polynomial<C> next = linear_factor(n + 1) * r[static_cast<size_t>(n)] -
                         C(4.0 * chain.d(n + 1)) * (zpoly * r[static_cast<size_t>(n) - 1]);
    r.push_back(std::move(next));
  }
  return r;
}

}  // namespace ricopoly
