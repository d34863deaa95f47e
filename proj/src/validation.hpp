#ifndef FIBREFILTER_SRC_VALIDATION_HPP
#define FIBREFILTER_SRC_VALIDATION_HPP

#include <string>

namespace fibrefilter::detail {

std::string format_number(double value);

void require_positive(double value, const char* symbol);
void require_nonnegative(double value, const char* symbol);
void require_open_unit(double value, const char* symbol);

} // namespace fibrefilter::detail

#endif
