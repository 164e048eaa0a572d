#include "leviflat/rational.hpp"

namespace lf {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

// |q| as display text.
std::string q_abs_str(const mpq_class& q) {
    mpq_class a = q < 0 ? mpq_class(-q) : q;
    return a.get_str();
}

} // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return q_str(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = q_str(im_) + "*i";
    }
    if (re_ == 0) return imag;
    // Combined form a+b*i / a-b*i.
    std::string out = q_str(re_);
    if (im_ > 0) {
        out += "+";
        out += (im_ == 1) ? "i" : q_abs_str(im_) + "*i";
    } else {
        out += "-";
        out += (im_ == -1) ? "i" : q_abs_str(im_) + "*i";
    }
    return out;
}

} // namespace lf
