#include "fbl/core/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

namespace fbl::fft {

namespace {

std::mutex planner_mutex;

struct Key {
  int kind;
  int n0;
  int n1;
  int sign;
  bool operator<(const Key& o) const {
    return std::tie(kind, n0, n1, sign) < std::tie(o.kind, o.n0, o.n1, o.sign);
  }
};

std::map<Key, fftw_plan>& plans() {
  static std::map<Key, fftw_plan> p;
  return p;
}

// plans are made on scratch buffers with the alignment FFTW uses for its own
// allocations; execution on user buffers goes through the new-array API, which
// requires matching alignment, so callers' data is copied when it differs
fftw_plan get_plan(const Key& key) {
  std::lock_guard<std::mutex> lock(planner_mutex);
  auto it = plans().find(key);
  if (it != plans().end()) return it->second;
  fftw_plan plan = nullptr;
  switch (key.kind) {
    case 0: {
      auto* buf = fftw_alloc_complex(key.n0);
      plan = fftw_plan_dft_1d(key.n0, buf, buf, key.sign, FFTW_ESTIMATE);
      fftw_free(buf);
      break;
    }
    case 1: {
      auto* buf = fftw_alloc_complex(static_cast<size_t>(key.n0) * key.n1);
      plan = fftw_plan_dft_2d(key.n0, key.n1, buf, buf, key.sign, FFTW_ESTIMATE);
      fftw_free(buf);
      break;
    }
    case 2: {
      auto* in = fftw_alloc_real(static_cast<size_t>(key.n0) * key.n1);
      auto* out = fftw_alloc_complex(static_cast<size_t>(key.n0) * (key.n1 / 2 + 1));
      plan = fftw_plan_dft_r2c_2d(key.n0, key.n1, in, out, FFTW_ESTIMATE);
      fftw_free(in);
      fftw_free(out);
      break;
    }
    case 3: {
      auto* in = fftw_alloc_complex(static_cast<size_t>(key.n0) * (key.n1 / 2 + 1));
      auto* out = fftw_alloc_real(static_cast<size_t>(key.n0) * key.n1);
      plan = fftw_plan_dft_c2r_2d(key.n0, key.n1, in, out, FFTW_ESTIMATE);
      fftw_free(in);
      fftw_free(out);
      break;
    }
    case 4: {
      auto* buf = fftw_alloc_real(key.n0);
      plan = fftw_plan_r2r_1d(key.n0, buf, buf, FFTW_REDFT00, FFTW_ESTIMATE);
      fftw_free(buf);
      break;
    }
  }
  plans()[key] = plan;
  return plan;
}

struct AlignedBuffer {
  explicit AlignedBuffer(size_t bytes) : ptr(fftw_malloc(bytes)), size(bytes) {}
  ~AlignedBuffer() { fftw_free(ptr); }
  void* ptr;
  size_t size;
};

}  // namespace

void c2c_1d(cplx* data, int n, int sign) {
  fftw_plan p = get_plan({0, n, 0, sign});
  auto* d = reinterpret_cast<fftw_complex*>(data);
  if (fftw_alignment_of(reinterpret_cast<double*>(data)) == 0) {
    fftw_execute_dft(p, d, d);
    return;
  }
  AlignedBuffer buf(sizeof(cplx) * n);
  std::memcpy(buf.ptr, data, buf.size);
  auto* b = static_cast<fftw_complex*>(buf.ptr);
  fftw_execute_dft(p, b, b);
  std::memcpy(data, buf.ptr, buf.size);
}

void c2c_1d(std::vector<cplx>& data, int sign) { c2c_1d(data.data(), static_cast<int>(data.size()), sign); }

void c2c_2d(std::vector<cplx>& data, int n0, int n1, int sign) {
  fftw_plan p = get_plan({1, n0, n1, sign});
  size_t bytes = sizeof(cplx) * static_cast<size_t>(n0) * n1;
  if (fftw_alignment_of(reinterpret_cast<double*>(data.data())) == 0) {
    auto* d = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, d, d);
    return;
  }
  AlignedBuffer buf(bytes);
  std::memcpy(buf.ptr, data.data(), bytes);
  auto* b = static_cast<fftw_complex*>(buf.ptr);
  fftw_execute_dft(p, b, b);
  std::memcpy(data.data(), buf.ptr, bytes);
}

void r2c_2d(const double* in, cplx* out, int n0, int n1) {
  fftw_plan p = get_plan({2, n0, n1, 0});
  size_t nin = static_cast<size_t>(n0) * n1;
  size_t nout = static_cast<size_t>(n0) * (n1 / 2 + 1);
  AlignedBuffer a(sizeof(double) * nin), b(sizeof(cplx) * nout);
  std::memcpy(a.ptr, in, a.size);
  fftw_execute_dft_r2c(p, static_cast<double*>(a.ptr), static_cast<fftw_complex*>(b.ptr));
  std::memcpy(out, b.ptr, b.size);
}

void c2r_2d(const cplx* in, double* out, int n0, int n1) {
  fftw_plan p = get_plan({3, n0, n1, 0});
  size_t nin = static_cast<size_t>(n0) * (n1 / 2 + 1);
  size_t nout = static_cast<size_t>(n0) * n1;
  AlignedBuffer a(sizeof(cplx) * nin), b(sizeof(double) * nout);
  std::memcpy(a.ptr, in, a.size);
  fftw_execute_dft_c2r(p, static_cast<fftw_complex*>(a.ptr), static_cast<double*>(b.ptr));
  std::memcpy(out, b.ptr, b.size);
}

void dct1(double* data, int n) {
  fftw_plan p = get_plan({4, n, 0, 0});
  if (fftw_alignment_of(data) == 0) {
    fftw_execute_r2r(p, data, data);
    return;
  }
  AlignedBuffer buf(sizeof(double) * n);
  std::memcpy(buf.ptr, data, buf.size);
  fftw_execute_r2r(p, static_cast<double*>(buf.ptr), static_cast<double*>(buf.ptr));
  std::memcpy(data, buf.ptr, buf.size);
}

}  // namespace fbl::fft
