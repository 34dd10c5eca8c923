#include "support/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

std::vector<double> jacobi_eigenvalues(cmat a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("oracle: bad matrix size");
  auto at = [&](std::size_t r, std::size_t c) -> cplx& { return a[r * n + c]; };

  double scale = 0.0;
  for (const cplx& v : a) scale += std::norm(v);
  const double stop = 1e-28 * std::max(1.0, scale);

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) off += std::norm(at(r, c));
    if (off <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const cplx phase = apq / mag;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        // Zero the (p,q) element with the unitary
        //   J = [[cos t, e^{i phi} sin t], [-e^{-i phi} sin t, cos t]].
        const double t = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double ct = std::cos(t), st = std::sin(t);
        for (std::size_t r = 0; r < n; ++r) {  // columns: A <- A J
          const cplx arp = at(r, p), arq = at(r, q);
          at(r, p) = ct * arp - std::conj(phase) * st * arq;
          at(r, q) = phase * st * arp + ct * arq;
        }
        for (std::size_t c = 0; c < n; ++c) {  // rows: A <- J^dagger A
          const cplx apc = at(p, c), aqc = at(q, c);
          at(p, c) = ct * apc - phase * st * aqc;
          at(q, c) = std::conj(phase) * st * apc + ct * aqc;
        }
      }
    }
  }

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i, i).real();
  std::sort(w.begin(), w.end());
  return w;
}

namespace {

std::vector<std::size_t> digits_of(std::size_t index,
                                   const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

}  // namespace

cmat reduce(const cmat& rho, const std::vector<std::size_t>& dims,
            const std::vector<std::size_t>& keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (rho.size() != total * total)
    throw std::invalid_argument("oracle: dims do not match matrix");

  std::vector<bool> kept(dims.size(), false);
  std::size_t kept_dim = 1;
  for (std::size_t k : keep) {
    kept[k] = true;
    kept_dim *= dims[k];
  }

  cmat out(kept_dim * kept_dim, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits_of(i, dims);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits_of(j, dims);
      bool diagonal_on_traced = true;
      std::size_t ik = 0, jk = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (kept[k]) {
          ik = ik * dims[k] + di[k];
          jk = jk * dims[k] + dj[k];
        } else if (di[k] != dj[k]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (diagonal_on_traced) out[ik * kept_dim + jk] += rho[i * total + j];
    }
  }
  return out;
}

double entropy_of_spectrum(const std::vector<double>& w) {
  double h = 0.0;
  for (double v : w) {
    if (v > 1e-12) h -= v * std::log2(v);
  }
  return h;
}

double subset_entropy(const cmat& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> keep = subset;
  std::sort(keep.begin(), keep.end());
  const cmat reduced = reduce(rho, dims, keep);
  std::size_t d = 1;
  for (std::size_t k : keep) d *= dims[k];
  return entropy_of_spectrum(jacobi_eigenvalues(reduced, d));
}

namespace {

std::vector<std::size_t> merged(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double mutual_information(const cmat& rho, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& x,
                          const std::vector<std::size_t>& y) {
  return subset_entropy(rho, dims, x) + subset_entropy(rho, dims, y) -
         subset_entropy(rho, dims, merged(x, y));
}

double conditional_mutual_information(const cmat& rho,
                                      const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& x,
                                      const std::vector<std::size_t>& y,
                                      const std::vector<std::size_t>& z) {
  return subset_entropy(rho, dims, merged(x, z)) +
         subset_entropy(rho, dims, merged(y, z)) -
         subset_entropy(rho, dims, z) -
         subset_entropy(rho, dims, merged(merged(x, y), z));
}

}  // namespace oracle
