#include "nlkg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace nlkg {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

// One cached plan per (n, sign). Plans are created with FFTW_ESTIMATE so the
// choice of codelets depends only on the transform shape and buffer alignment,
// which keeps results bit-identical from run to run. The shared buffer is
// fftw_malloc-aligned; callers copy in and out under the lock.
struct PlanSlot {
  fftw_plan plan = nullptr;
  fftw_complex* buf = nullptr;
  std::size_t n = 0;
};

std::mutex g_mutex;
std::map<std::pair<std::size_t, int>, PlanSlot> g_plans;

PlanSlot& get_plan(std::size_t n, int sign) {
  auto key = std::make_pair(n, sign);
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;
  PlanSlot slot;
  slot.n = n;
  slot.buf = fftw_alloc_complex(n);
  if (!slot.buf) throw std::bad_alloc();
  slot.plan = fftw_plan_dft_1d(static_cast<int>(n), slot.buf, slot.buf,
                               sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                               FFTW_ESTIMATE);
  if (!slot.plan) throw std::runtime_error("fftw_plan_dft_1d failed");
  return g_plans.emplace(key, slot).first->second;
}

}  // namespace

void fft(std::vector<cdouble>& data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: length must be a power of two");
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanSlot& slot = get_plan(n, sign);
  for (std::size_t i = 0; i < n; ++i) {
    slot.buf[i][0] = data[i].real();
    slot.buf[i][1] = data[i].imag();
  }
  fftw_execute(slot.plan);
  for (std::size_t i = 0; i < n; ++i) data[i] = cdouble(slot.buf[i][0], slot.buf[i][1]);
}

std::vector<cdouble> fft_forward_real(const std::vector<double>& f) {
  std::vector<cdouble> data(f.begin(), f.end());
  fft(data, -1);
  return data;
}

std::vector<double> fft_inverse_to_real(const std::vector<cdouble>& F) {
  std::vector<cdouble> data = F;
  fft(data, +1);
  const double inv_n = 1.0 / static_cast<double>(F.size());
  std::vector<double> out(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) out[i] = data[i].real() * inv_n;
  return out;
}

}  // namespace nlkg
