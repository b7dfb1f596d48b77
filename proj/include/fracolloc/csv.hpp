#ifndef FRACOLLOC_CSV_HPP
#define FRACOLLOC_CSV_HPP

#include <string>

namespace fracolloc {

/// Shortest representation carrying 17 significant digits ("%.17g").
std::string format_g17(double v);

}  // namespace fracolloc

#endif
