#pragma once

#include <span>
#include <string>
#include <vector>

#include "hh/control_signal.hpp"

namespace hh {

// CSV conventions: ',' separator, '.' decimal point, header row, values at 17
// significant digits (lossless double round trip).

std::string format_double(double v);

// columns: t, re_u, im_u
ControlSignal read_control_csv(const std::string& path, double horizon = 0.0,
                               ControlSignal::Interp interp = ControlSignal::Interp::PiecewiseLinear);
void write_control_csv(const std::string& path, const ControlSignal& u, int n_samples = 0);

// columns: t, re_uminus, im_uminus, re_uplus, im_uplus
void write_control_pair_csv(const std::string& path, const ControlSignal& u_minus,
                            const ControlSignal& u_plus, int n_samples = 0);
std::pair<ControlSignal, ControlSignal> read_control_pair_csv(const std::string& path,
                                                              double horizon = 0.0);

// columns: re_z, im_z, re_w, im_w
void write_state_csv(const std::string& path, std::span<const cplx> z, std::span<const cplx> w);
std::pair<std::vector<cplx>, std::vector<cplx>> read_state_csv(const std::string& path);

} // namespace hh
