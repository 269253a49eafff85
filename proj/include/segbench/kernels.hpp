#pragma once

#include <cstdint>

// Low-level compute kernels on raw buffers. Production versions parallelize
// with OpenMP over independent output elements only, so results are
// bit-identical to the serial references in kernels::ref for any thread
// count. The references are kept for tests and for the kernel benchmark.

namespace segbench::kernels {

struct Conv2dDims {
  std::int64_t n, cin, h, w;   // input
  std::int64_t cout, kh, kw;   // kernel
  std::int64_t stride, pad;
  std::int64_t oh, ow;         // output
};

struct ConvT2dDims {
  std::int64_t n, cin, h, w;   // input
  std::int64_t cout, kh, kw;   // kernel is cin x cout x kh x kw
  std::int64_t stride;
  std::int64_t oh, ow;
};

void conv2d_forward(const double* x, const double* k, const double* b, double* y,
                    const Conv2dDims& d);
void conv2d_grad_input(const double* gy, const double* k, double* gx, const Conv2dDims& d);
void conv2d_grad_kernel(const double* x, const double* gy, double* gk, const Conv2dDims& d);
void conv2d_grad_bias(const double* gy, double* gb, const Conv2dDims& d);

void conv_transpose2d_forward(const double* x, const double* k, double* y, const ConvT2dDims& d);
void conv_transpose2d_grad_input(const double* gy, const double* k, double* gx,
                                 const ConvT2dDims& d);
void conv_transpose2d_grad_kernel(const double* x, const double* gy, double* gk,
                                  const ConvT2dDims& d);

// Separable-free 2-D convolution with a (2r+1)^2 kernel, reflected borders.
void gaussian_convolve(const double* img, std::int64_t rows, std::int64_t cols,
                       const double* kernel, std::int64_t radius, double* out);

// One explicit Perona-Malik sweep, 4-neighborhood, replicated borders.
void diffusion_step(const double* img, std::int64_t rows, std::int64_t cols, double s,
                    double lambda, double* out);

void resize_bilinear(const double* src, std::int64_t srows, std::int64_t scols, double* dst,
                     std::int64_t drows, std::int64_t dcols);

// max over a of min over b of squared Euclidean distance; points are (row,col)
// pairs flattened two to a point. Exact integer arithmetic.
std::int64_t directed_hausdorff_sq(const std::int64_t* a, std::int64_t na,
                                   const std::int64_t* b, std::int64_t nb);

namespace ref {

void conv2d_forward(const double* x, const double* k, const double* b, double* y,
                    const Conv2dDims& d);
void conv2d_grad_input(const double* gy, const double* k, double* gx, const Conv2dDims& d);
void conv2d_grad_kernel(const double* x, const double* gy, double* gk, const Conv2dDims& d);
void conv2d_grad_bias(const double* gy, double* gb, const Conv2dDims& d);

void conv_transpose2d_forward(const double* x, const double* k, double* y, const ConvT2dDims& d);
void conv_transpose2d_grad_input(const double* gy, const double* k, double* gx,
                                 const ConvT2dDims& d);
void conv_transpose2d_grad_kernel(const double* x, const double* gy, double* gk,
                                  const ConvT2dDims& d);

void gaussian_convolve(const double* img, std::int64_t rows, std::int64_t cols,
                       const double* kernel, std::int64_t radius, double* out);
void diffusion_step(const double* img, std::int64_t rows, std::int64_t cols, double s,
                    double lambda, double* out);
void resize_bilinear(const double* src, std::int64_t srows, std::int64_t scols, double* dst,
                     std::int64_t drows, std::int64_t dcols);
std::int64_t directed_hausdorff_sq(const std::int64_t* a, std::int64_t na,
                                   const std::int64_t* b, std::int64_t nb);

}  // namespace ref

}  // namespace segbench::kernels
