#include "fessi/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace fessi::fft {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // Plan once with FFTW_ESTIMATE | FFTW_UNALIGNED so the plan can later be
  // executed on arbitrary std::vector storage via fftw_execute_dft.
  std::vector<std::complex<double>> scratch(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), ptr, ptr,
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

// circular shift so that index N/2 moves to 0 (ifftshift for even N)
void half_rotate(cvec& v) {
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2),
              v.end());
}

// inverse of half_rotate for odd sizes; identical for even sizes
void half_rotate_back(cvec& v) {
  std::rotate(v.begin(),
              v.begin() + static_cast<std::ptrdiff_t>((v.size() + 1) / 2),
              v.end());
}

}  // namespace

void centered_dft_inplace(cvec& data, int sign) {
  const std::size_t n = data.size();
  if (n == 0) return;
  fftw_plan p = plan_for(n, sign);
  half_rotate(data);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, ptr, ptr);
  half_rotate_back(data);
  // With h = N/2 (integer division) the rotation pair realises the
  // (i - h)(j - h) kernel exactly for even and odd N alike.
}

cvec centered_dft(const cvec& in, int sign) {
  cvec out = in;
  centered_dft_inplace(out, sign);
  return out;
}

}  // namespace fessi::fft
