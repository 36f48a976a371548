#pragma once

#include <Eigen/Dense>

#include "latentforge/common.hpp"

namespace latentforge {

// Dense activation block: (h*w) rows by channel columns, scanline order
// (row index = y*w + x). Plain matrices use h = rows, w = 1.
struct Volume {
  Eigen::MatrixXd m;
  int h = 0, w = 0;

  Volume() = default;
  Volume(Eigen::MatrixXd mat, int hh, int ww) : m(std::move(mat)), h(hh), w(ww) {
    if (m.rows() != Eigen::Index(h) * w)
      throw ValidationError("Volume: rows != h*w");
  }

  int c() const { return int(m.cols()); }
  bool same_shape(const Volume& o) const {
    return h == o.h && w == o.w && m.cols() == o.m.cols();
  }

  static Volume from_image(const Image& img) {
    Volume v;
    v.h = int(img.rows());
    v.w = int(img.cols());
    v.m.resize(Eigen::Index(v.h) * v.w, 1);
    for (int y = 0; y < v.h; ++y)
      for (int x = 0; x < v.w; ++x) v.m(Eigen::Index(y) * v.w + x, 0) = img(y, x);
    return v;
  }

  Image to_image() const {
    if (m.cols() != 1) throw ValidationError("Volume::to_image: c != 1");
    Image img(h, w);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) img(y, x) = m(Eigen::Index(y) * w + x, 0);
    return img;
  }

  static Volume from_matrix(const Eigen::MatrixXd& mat) {
    Volume v;
    v.m = mat;
    v.h = int(mat.rows());
    v.w = 1;
    return v;
  }

  static Volume zeros_like(const Volume& o) {
    Volume v;
    v.m = Eigen::MatrixXd::Zero(o.m.rows(), o.m.cols());
    v.h = o.h;
    v.w = o.w;
    return v;
  }
};

// 3x3 same-padding patch matrix: out is (h*w) x (9*c), column block k holds
// the (dy,dx) shifted plane for k = (dy+1)*3 + (dx+1).
Eigen::MatrixXd im2col3(const Volume& x);

// Adjoint of im2col3: scatter patch-gradient back onto the input grid.
void col2im3_add(const Eigen::MatrixXd& dpatch, Volume& dx);

Volume avgpool2(const Volume& x);
Volume upsample2(const Volume& x);

// 2x box-filter reduction of a plain image, repeated `times`.
Image downsample_image(const Image& img, int times);

}  // namespace latentforge
