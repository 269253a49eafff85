#include "segbench/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace segbench::kernels {

namespace {

inline std::int64_t reflect_index(std::int64_t i, std::int64_t n) {
  // mirror across the border, edge sample repeated; folds until in range
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

inline double diffusivity_of(double delta, double s) {
  double r = delta / s;
  return 1.0 / (1.0 + r * r);
}

}  // namespace

// ---------------------------------------------------------------- conv2d ---

void conv2d_forward(const double* x, const double* k, const double* b, double* y,
                    const Conv2dDims& d) {
#pragma omp parallel for collapse(3) schedule(static)
  for (std::int64_t n = 0; n < d.n; ++n) {
    for (std::int64_t co = 0; co < d.cout; ++co) {
      for (std::int64_t oh = 0; oh < d.oh; ++oh) {
        const std::int64_t ih0 = oh * d.stride - d.pad;
        const std::int64_t kh_lo = std::max<std::int64_t>(0, -ih0);
        const std::int64_t kh_hi = std::min(d.kh, d.h - ih0);
        double* yrow = y + ((n * d.cout + co) * d.oh + oh) * d.ow;
        for (std::int64_t ow = 0; ow < d.ow; ++ow) {
          const std::int64_t iw0 = ow * d.stride - d.pad;
          const std::int64_t kw_lo = std::max<std::int64_t>(0, -iw0);
          const std::int64_t kw_hi = std::min(d.kw, d.w - iw0);
          double acc = b ? b[co] : 0.0;
          for (std::int64_t ci = 0; ci < d.cin; ++ci) {
            const double* xc = x + ((n * d.cin + ci) * d.h) * d.w;
            const double* kc = k + ((co * d.cin + ci) * d.kh) * d.kw;
            for (std::int64_t kh = kh_lo; kh < kh_hi; ++kh) {
              const double* xr = xc + (ih0 + kh) * d.w + iw0;
              const double* kr = kc + kh * d.kw;
              for (std::int64_t kw = kw_lo; kw < kw_hi; ++kw) {
                acc += xr[kw] * kr[kw];
              }
            }
          }
          yrow[ow] = acc;
        }
      }
    }
  }
}

void conv2d_grad_input(const double* gy, const double* k, double* gx, const Conv2dDims& d) {
#pragma omp parallel for collapse(3) schedule(static)
  for (std::int64_t n = 0; n < d.n; ++n) {
    for (std::int64_t ci = 0; ci < d.cin; ++ci) {
      for (std::int64_t ih = 0; ih < d.h; ++ih) {
        double* gxrow = gx + ((n * d.cin + ci) * d.h + ih) * d.w;
        for (std::int64_t iw = 0; iw < d.w; ++iw) {
          double acc = 0.0;
          for (std::int64_t co = 0; co < d.cout; ++co) {
            const double* gyc = gy + ((n * d.cout + co) * d.oh) * d.ow;
            const double* kc = k + ((co * d.cin + ci) * d.kh) * d.kw;
            for (std::int64_t kh = 0; kh < d.kh; ++kh) {
              const std::int64_t num_h = ih + d.pad - kh;
              if (num_h < 0 || num_h % d.stride != 0) continue;
              const std::int64_t oh = num_h / d.stride;
              if (oh >= d.oh) continue;
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                const std::int64_t num_w = iw + d.pad - kw;
                if (num_w < 0 || num_w % d.stride != 0) continue;
                const std::int64_t ow = num_w / d.stride;
                if (ow >= d.ow) continue;
                acc += gyc[oh * d.ow + ow] * kc[kh * d.kw + kw];
              }
            }
          }
          gxrow[iw] += acc;
        }
      }
    }
  }
}

void conv2d_grad_kernel(const double* x, const double* gy, double* gk, const Conv2dDims& d) {
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t co = 0; co < d.cout; ++co) {
    for (std::int64_t ci = 0; ci < d.cin; ++ci) {
      double* gkc = gk + ((co * d.cin + ci) * d.kh) * d.kw;
      for (std::int64_t kh = 0; kh < d.kh; ++kh) {
        for (std::int64_t kw = 0; kw < d.kw; ++kw) {
          double acc = 0.0;
          for (std::int64_t n = 0; n < d.n; ++n) {
            const double* xc = x + ((n * d.cin + ci) * d.h) * d.w;
            const double* gyc = gy + ((n * d.cout + co) * d.oh) * d.ow;
            for (std::int64_t oh = 0; oh < d.oh; ++oh) {
              const std::int64_t ih = oh * d.stride - d.pad + kh;
              if (ih < 0 || ih >= d.h) continue;
              for (std::int64_t ow = 0; ow < d.ow; ++ow) {
                const std::int64_t iw = ow * d.stride - d.pad + kw;
                if (iw < 0 || iw >= d.w) continue;
                acc += xc[ih * d.w + iw] * gyc[oh * d.ow + ow];
              }
            }
          }
          gkc[kh * d.kw + kw] += acc;
        }
      }
    }
  }
}

void conv2d_grad_bias(const double* gy, double* gb, const Conv2dDims& d) {
#pragma omp parallel for schedule(static)
  for (std::int64_t co = 0; co < d.cout; ++co) {
    double acc = 0.0;
    for (std::int64_t n = 0; n < d.n; ++n) {
      const double* gyc = gy + ((n * d.cout + co) * d.oh) * d.ow;
      for (std::int64_t i = 0; i < d.oh * d.ow; ++i) acc += gyc[i];
    }
    gb[co] += acc;
  }
}

// ------------------------------------------------------- conv_transpose2d ---

void conv_transpose2d_forward(const double* x, const double* k, double* y,
                              const ConvT2dDims& d) {
#pragma omp parallel for collapse(3) schedule(static)
  for (std::int64_t n = 0; n < d.n; ++n) {
    for (std::int64_t co = 0; co < d.cout; ++co) {
      for (std::int64_t oy = 0; oy < d.oh; ++oy) {
        double* yrow = y + ((n * d.cout + co) * d.oh + oy) * d.ow;
        for (std::int64_t ox = 0; ox < d.ow; ++ox) {
          double acc = 0.0;
          for (std::int64_t ci = 0; ci < d.cin; ++ci) {
            const double* xc = x + ((n * d.cin + ci) * d.h) * d.w;
            const double* kc = k + ((ci * d.cout + co) * d.kh) * d.kw;
            for (std::int64_t kh = 0; kh < d.kh; ++kh) {
              const std::int64_t num_h = oy - kh;
              if (num_h < 0 || num_h % d.stride != 0) continue;
              const std::int64_t i = num_h / d.stride;
              if (i >= d.h) continue;
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                const std::int64_t num_w = ox - kw;
                if (num_w < 0 || num_w % d.stride != 0) continue;
                const std::int64_t j = num_w / d.stride;
                if (j >= d.w) continue;
                acc += xc[i * d.w + j] * kc[kh * d.kw + kw];
              }
            }
          }
          yrow[ox] = acc;
        }
      }
    }
  }
}

void conv_transpose2d_grad_input(const double* gy, const double* k, double* gx,
                                 const ConvT2dDims& d) {
#pragma omp parallel for collapse(3) schedule(static)
  for (std::int64_t n = 0; n < d.n; ++n) {
    for (std::int64_t ci = 0; ci < d.cin; ++ci) {
      for (std::int64_t i = 0; i < d.h; ++i) {
        double* gxrow = gx + ((n * d.cin + ci) * d.h + i) * d.w;
        for (std::int64_t j = 0; j < d.w; ++j) {
          double acc = 0.0;
          for (std::int64_t co = 0; co < d.cout; ++co) {
            const double* gyc = gy + ((n * d.cout + co) * d.oh) * d.ow;
            const double* kc = k + ((ci * d.cout + co) * d.kh) * d.kw;
            for (std::int64_t kh = 0; kh < d.kh; ++kh) {
              const double* gyrow = gyc + (i * d.stride + kh) * d.ow + j * d.stride;
              const double* krow = kc + kh * d.kw;
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                acc += gyrow[kw] * krow[kw];
              }
            }
          }
          gxrow[j] += acc;
        }
      }
    }
  }
}

void conv_transpose2d_grad_kernel(const double* x, const double* gy, double* gk,
                                  const ConvT2dDims& d) {
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t ci = 0; ci < d.cin; ++ci) {
    for (std::int64_t co = 0; co < d.cout; ++co) {
      double* gkc = gk + ((ci * d.cout + co) * d.kh) * d.kw;
      for (std::int64_t kh = 0; kh < d.kh; ++kh) {
        for (std::int64_t kw = 0; kw < d.kw; ++kw) {
          double acc = 0.0;
          for (std::int64_t n = 0; n < d.n; ++n) {
            const double* xc = x + ((n * d.cin + ci) * d.h) * d.w;
            const double* gyc = gy + ((n * d.cout + co) * d.oh) * d.ow;
            for (std::int64_t i = 0; i < d.h; ++i) {
              const double* gyrow = gyc + (i * d.stride + kh) * d.ow + kw;
              const double* xrow = xc + i * d.w;
              for (std::int64_t j = 0; j < d.w; ++j) {
                acc += xrow[j] * gyrow[j * d.stride];
              }
            }
          }
          gkc[kh * d.kw + kw] += acc;
        }
      }
    }
  }
}

// ------------------------------------------------------------- preprocess ---

void gaussian_convolve(const double* img, std::int64_t rows, std::int64_t cols,
                       const double* kernel, std::int64_t radius, double* out) {
  const std::int64_t ksz = 2 * radius + 1;
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (std::int64_t dr = -radius; dr <= radius; ++dr) {
        const std::int64_t rr = reflect_index(r + dr, rows);
        const double* krow = kernel + (dr + radius) * ksz + radius;
        const double* irow = img + rr * cols;
        for (std::int64_t dc = -radius; dc <= radius; ++dc) {
          acc += krow[dc] * irow[reflect_index(c + dc, cols)];
        }
      }
      out[r * cols + c] = acc;
    }
  }
}

void diffusion_step(const double* img, std::int64_t rows, std::int64_t cols, double s,
                    double lambda, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      const double center = img[r * cols + c];
      // one-sided differences toward N, S, W, E; replicated edges give 0
      const double dn = (r > 0 ? img[(r - 1) * cols + c] : center) - center;
      const double ds = (r + 1 < rows ? img[(r + 1) * cols + c] : center) - center;
      const double dw = (c > 0 ? img[r * cols + c - 1] : center) - center;
      const double de = (c + 1 < cols ? img[r * cols + c + 1] : center) - center;
      double flux = diffusivity_of(std::fabs(dn), s) * dn;
      flux += diffusivity_of(std::fabs(ds), s) * ds;
      flux += diffusivity_of(std::fabs(dw), s) * dw;
      flux += diffusivity_of(std::fabs(de), s) * de;
      out[r * cols + c] = center + lambda * flux;
    }
  }
}

void resize_bilinear(const double* src, std::int64_t srows, std::int64_t scols, double* dst,
                     std::int64_t drows, std::int64_t dcols) {
  const double rscale = static_cast<double>(srows) / static_cast<double>(drows);
  const double cscale = static_cast<double>(scols) / static_cast<double>(dcols);
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < drows; ++r) {
    double sr = (static_cast<double>(r) + 0.5) * rscale - 0.5;
    sr = std::clamp(sr, 0.0, static_cast<double>(srows - 1));
    const std::int64_t r0 = static_cast<std::int64_t>(sr);
    const std::int64_t r1 = std::min(r0 + 1, srows - 1);
    const double fr = sr - static_cast<double>(r0);
    for (std::int64_t c = 0; c < dcols; ++c) {
      double sc = (static_cast<double>(c) + 0.5) * cscale - 0.5;
      sc = std::clamp(sc, 0.0, static_cast<double>(scols - 1));
      const std::int64_t c0 = static_cast<std::int64_t>(sc);
      const std::int64_t c1 = std::min(c0 + 1, scols - 1);
      const double fc = sc - static_cast<double>(c0);
      const double v00 = src[r0 * scols + c0];
      const double v01 = src[r0 * scols + c1];
      const double v10 = src[r1 * scols + c0];
      const double v11 = src[r1 * scols + c1];
      dst[r * dcols + c] = (1.0 - fr) * ((1.0 - fc) * v00 + fc * v01) +
                           fr * ((1.0 - fc) * v10 + fc * v11);
    }
  }
}

// --------------------------------------------------------------- hausdorff ---

std::int64_t directed_hausdorff_sq(const std::int64_t* a, std::int64_t na,
                                   const std::int64_t* b, std::int64_t nb) {
  std::int64_t worst = 0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t i = 0; i < na; ++i) {
    const std::int64_t ar = a[2 * i], ac = a[2 * i + 1];
    std::int64_t best = INT64_MAX;
    for (std::int64_t j = 0; j < nb; ++j) {
      const std::int64_t dr = ar - b[2 * j];
      const std::int64_t dc = ac - b[2 * j + 1];
      const std::int64_t dsq = dr * dr + dc * dc;
      if (dsq < best) best = dsq;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

// ------------------------------------------------------- serial references ---

namespace ref {

void conv2d_forward(const double* x, const double* k, const double* b, double* y,
                    const Conv2dDims& d) {
  for (std::int64_t n = 0; n < d.n; ++n)
    for (std::int64_t co = 0; co < d.cout; ++co)
      for (std::int64_t oh = 0; oh < d.oh; ++oh)
        for (std::int64_t ow = 0; ow < d.ow; ++ow) {
          double acc = b ? b[co] : 0.0;
          for (std::int64_t ci = 0; ci < d.cin; ++ci)
            for (std::int64_t kh = 0; kh < d.kh; ++kh)
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                const std::int64_t ih = oh * d.stride - d.pad + kh;
                const std::int64_t iw = ow * d.stride - d.pad + kw;
                if (ih < 0 || ih >= d.h || iw < 0 || iw >= d.w) continue;
                acc += x[((n * d.cin + ci) * d.h + ih) * d.w + iw] *
                       k[((co * d.cin + ci) * d.kh + kh) * d.kw + kw];
              }
          y[((n * d.cout + co) * d.oh + oh) * d.ow + ow] = acc;
        }
}

void conv2d_grad_input(const double* gy, const double* k, double* gx, const Conv2dDims& d) {
  for (std::int64_t n = 0; n < d.n; ++n)
    for (std::int64_t ci = 0; ci < d.cin; ++ci)
      for (std::int64_t ih = 0; ih < d.h; ++ih)
        for (std::int64_t iw = 0; iw < d.w; ++iw) {
          double acc = 0.0;
          for (std::int64_t co = 0; co < d.cout; ++co)
            for (std::int64_t kh = 0; kh < d.kh; ++kh)
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                const std::int64_t num_h = ih + d.pad - kh;
                const std::int64_t num_w = iw + d.pad - kw;
                if (num_h < 0 || num_w < 0) continue;
                if (num_h % d.stride != 0 || num_w % d.stride != 0) continue;
                const std::int64_t oh = num_h / d.stride;
                const std::int64_t ow = num_w / d.stride;
                if (oh >= d.oh || ow >= d.ow) continue;
                acc += gy[((n * d.cout + co) * d.oh + oh) * d.ow + ow] *
                       k[((co * d.cin + ci) * d.kh + kh) * d.kw + kw];
              }
          gx[((n * d.cin + ci) * d.h + ih) * d.w + iw] += acc;
        }
}

void conv2d_grad_kernel(const double* x, const double* gy, double* gk, const Conv2dDims& d) {
  for (std::int64_t co = 0; co < d.cout; ++co)
    for (std::int64_t ci = 0; ci < d.cin; ++ci)
      for (std::int64_t kh = 0; kh < d.kh; ++kh)
        for (std::int64_t kw = 0; kw < d.kw; ++kw) {
          double acc = 0.0;
          for (std::int64_t n = 0; n < d.n; ++n)
            for (std::int64_t oh = 0; oh < d.oh; ++oh)
              for (std::int64_t ow = 0; ow < d.ow; ++ow) {
                const std::int64_t ih = oh * d.stride - d.pad + kh;
                const std::int64_t iw = ow * d.stride - d.pad + kw;
                if (ih < 0 || ih >= d.h || iw < 0 || iw >= d.w) continue;
                acc += x[((n * d.cin + ci) * d.h + ih) * d.w + iw] *
                       gy[((n * d.cout + co) * d.oh + oh) * d.ow + ow];
              }
          gk[((co * d.cin + ci) * d.kh + kh) * d.kw + kw] += acc;
        }
}

void conv2d_grad_bias(const double* gy, double* gb, const Conv2dDims& d) {
  for (std::int64_t co = 0; co < d.cout; ++co) {
    double acc = 0.0;
    for (std::int64_t n = 0; n < d.n; ++n)
      for (std::int64_t i = 0; i < d.oh * d.ow; ++i)
        acc += gy[(n * d.cout + co) * d.oh * d.ow + i];
    gb[co] += acc;
  }
}

void conv_transpose2d_forward(const double* x, const double* k, double* y,
                              const ConvT2dDims& d) {
  for (std::int64_t n = 0; n < d.n; ++n)
    for (std::int64_t co = 0; co < d.cout; ++co)
      for (std::int64_t oy = 0; oy < d.oh; ++oy)
        for (std::int64_t ox = 0; ox < d.ow; ++ox) {
          double acc = 0.0;
          for (std::int64_t ci = 0; ci < d.cin; ++ci)
            for (std::int64_t kh = 0; kh < d.kh; ++kh)
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                const std::int64_t num_h = oy - kh;
                const std::int64_t num_w = ox - kw;
                if (num_h < 0 || num_w < 0) continue;
                if (num_h % d.stride != 0 || num_w % d.stride != 0) continue;
                const std::int64_t i = num_h / d.stride;
                const std::int64_t j = num_w / d.stride;
                if (i >= d.h || j >= d.w) continue;
                acc += x[((n * d.cin + ci) * d.h + i) * d.w + j] *
                       k[((ci * d.cout + co) * d.kh + kh) * d.kw + kw];
              }
          y[((n * d.cout + co) * d.oh + oy) * d.ow + ox] = acc;
        }
}

void conv_transpose2d_grad_input(const double* gy, const double* k, double* gx,
                                 const ConvT2dDims& d) {
  for (std::int64_t n = 0; n < d.n; ++n)
    for (std::int64_t ci = 0; ci < d.cin; ++ci)
      for (std::int64_t i = 0; i < d.h; ++i)
        for (std::int64_t j = 0; j < d.w; ++j) {
          double acc = 0.0;
          for (std::int64_t co = 0; co < d.cout; ++co)
            for (std::int64_t kh = 0; kh < d.kh; ++kh)
              for (std::int64_t kw = 0; kw < d.kw; ++kw) {
                acc += gy[((n * d.cout + co) * d.oh + i * d.stride + kh) * d.ow +
                          j * d.stride + kw] *
                       k[((ci * d.cout + co) * d.kh + kh) * d.kw + kw];
              }
          gx[((n * d.cin + ci) * d.h + i) * d.w + j] += acc;
        }
}

void conv_transpose2d_grad_kernel(const double* x, const double* gy, double* gk,
                                  const ConvT2dDims& d) {
  for (std::int64_t ci = 0; ci < d.cin; ++ci)
    for (std::int64_t co = 0; co < d.cout; ++co)
      for (std::int64_t kh = 0; kh < d.kh; ++kh)
        for (std::int64_t kw = 0; kw < d.kw; ++kw) {
          double acc = 0.0;
          for (std::int64_t n = 0; n < d.n; ++n)
            for (std::int64_t i = 0; i < d.h; ++i)
              for (std::int64_t j = 0; j < d.w; ++j) {
                acc += x[((n * d.cin + ci) * d.h + i) * d.w + j] *
                       gy[((n * d.cout + co) * d.oh + i * d.stride + kh) * d.ow +
                          j * d.stride + kw];
              }
          gk[((ci * d.cout + co) * d.kh + kh) * d.kw + kw] += acc;
        }
}

void gaussian_convolve(const double* img, std::int64_t rows, std::int64_t cols,
                       const double* kernel, std::int64_t radius, double* out) {
  const std::int64_t ksz = 2 * radius + 1;
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (std::int64_t dr = -radius; dr <= radius; ++dr)
        for (std::int64_t dc = -radius; dc <= radius; ++dc) {
          const std::int64_t rr = reflect_index(r + dr, rows);
          const std::int64_t cc = reflect_index(c + dc, cols);
          acc += kernel[(dr + radius) * ksz + (dc + radius)] * img[rr * cols + cc];
        }
      out[r * cols + c] = acc;
    }
}

void diffusion_step(const double* img, std::int64_t rows, std::int64_t cols, double s,
                    double lambda, double* out) {
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) {
      const double center = img[r * cols + c];
      const double dn = (r > 0 ? img[(r - 1) * cols + c] : center) - center;
      const double ds = (r + 1 < rows ? img[(r + 1) * cols + c] : center) - center;
      const double dw = (c > 0 ? img[r * cols + c - 1] : center) - center;
      const double de = (c + 1 < cols ? img[r * cols + c + 1] : center) - center;
      double flux = diffusivity_of(std::fabs(dn), s) * dn;
      flux += diffusivity_of(std::fabs(ds), s) * ds;
      flux += diffusivity_of(std::fabs(dw), s) * dw;
      flux += diffusivity_of(std::fabs(de), s) * de;
      out[r * cols + c] = center + lambda * flux;
    }
}

void resize_bilinear(const double* src, std::int64_t srows, std::int64_t scols, double* dst,
                     std::int64_t drows, std::int64_t dcols) {
  const double rscale = static_cast<double>(srows) / static_cast<double>(drows);
  const double cscale = static_cast<double>(scols) / static_cast<double>(dcols);
  for (std::int64_t r = 0; r < drows; ++r)
    for (std::int64_t c = 0; c < dcols; ++c) {
      double sr = std::clamp((static_cast<double>(r) + 0.5) * rscale - 0.5, 0.0,
                             static_cast<double>(srows - 1));
      double sc = std::clamp((static_cast<double>(c) + 0.5) * cscale - 0.5, 0.0,
                             static_cast<double>(scols - 1));
      const std::int64_t r0 = static_cast<std::int64_t>(sr);
      const std::int64_t c0 = static_cast<std::int64_t>(sc);
      const std::int64_t r1 = std::min(r0 + 1, srows - 1);
      const std::int64_t c1 = std::min(c0 + 1, scols - 1);
      const double fr = sr - static_cast<double>(r0);
      const double fc = sc - static_cast<double>(c0);
      dst[r * dcols + c] = (1.0 - fr) * ((1.0 - fc) * src[r0 * scols + c0] + fc * src[r0 * scols + c1]) +
                           fr * ((1.0 - fc) * src[r1 * scols + c0] + fc * src[r1 * scols + c1]);
    }
}

std::int64_t directed_hausdorff_sq(const std::int64_t* a, std::int64_t na,
                                   const std::int64_t* b, std::int64_t nb) {
  std::int64_t worst = 0;
  for (std::int64_t i = 0; i < na; ++i) {
    std::int64_t best = INT64_MAX;
    for (std::int64_t j = 0; j < nb; ++j) {
      const std::int64_t dr = a[2 * i] - b[2 * j];
      const std::int64_t dc = a[2 * i + 1] - b[2 * j + 1];
      const std::int64_t dsq = dr * dr + dc * dc;
      if (dsq < best) best = dsq;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

}  // namespace ref

}  // namespace segbench::kernels
