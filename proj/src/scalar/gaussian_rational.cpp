#include "hcs/scalar/gaussian_rational.hpp"

#include <stdexcept>

namespace hcs {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (is_real()) return GaussianRational(mpq_class(1 / re_));
    mpq_class n = norm();
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("GaussianRational: division by zero");
        re_ /= o.re_;
        if (!is_real()) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "*I";
    std::string s = re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + im_.get_str() + "*I";
}

}  // namespace hcs
