#include "aplus/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace aplus::fft {
namespace {

using cplx = std::complex<double>;

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer alloc(std::size_t n) { return Buffer(fftw_alloc_complex(n)); }

// Planning is not thread-safe in FFTW; execution with new arrays is. Plans
// are created once per (size, sign) on fftw_malloc'd buffers so every later
// buffer has matching alignment.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    Buffer in = alloc(n), out = alloc(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), sign, FFTW_ESTIMATE);
    plans_.emplace(key, p);
    return p;
  }
  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void run(std::size_t n, int sign, fftw_complex* in, fftw_complex* out) {
  fftw_execute_dft(cache().get(n, sign), in, out);
}

cplx* as_cplx(fftw_complex* p) { return reinterpret_cast<cplx*>(p); }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

std::vector<cplx> forward(std::span<const cplx> x) {
  const std::size_t n = x.size();
  Buffer in = alloc(n), out = alloc(n);
  std::copy(x.begin(), x.end(), as_cplx(in.get()));
  run(n, FFTW_FORWARD, in.get(), out.get());
  return {as_cplx(out.get()), as_cplx(out.get()) + n};
}

std::vector<cplx> convolve(std::span<const cplx> a, std::span<const cplx> b, std::size_t out_len) {
  if (a.empty() || b.empty() || out_len == 0) return std::vector<cplx>(out_len);
  const std::size_t la = std::min(a.size(), out_len);
  const std::size_t lb = std::min(b.size(), out_len);
  const std::size_t n = next_pow2(la + lb - 1);
  Buffer fa = alloc(n), fb = alloc(n), tmp = alloc(n);
  cplx* pa = as_cplx(tmp.get());
  std::fill(pa, pa + n, cplx{});
  std::copy(a.begin(), a.begin() + la, pa);
  run(n, FFTW_FORWARD, tmp.get(), fa.get());
  std::fill(pa, pa + n, cplx{});
  std::copy(b.begin(), b.begin() + lb, pa);
  run(n, FFTW_FORWARD, tmp.get(), fb.get());
  cplx* xa = as_cplx(fa.get());
  const cplx* xb = as_cplx(fb.get());
  for (std::size_t k = 0; k < n; ++k) xa[k] *= xb[k];
  run(n, FFTW_BACKWARD, fa.get(), tmp.get());
  std::vector<cplx> out(out_len);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < std::min(out_len, n); ++k) out[k] = pa[k] * scale;
  return out;
}

}  // namespace aplus::fft
