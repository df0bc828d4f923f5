#pragma once

#include <complex>

namespace hecke {

using Complex = std::complex<double>;

}
