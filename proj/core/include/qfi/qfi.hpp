#ifndef QFI_QFI_HPP
#define QFI_QFI_HPP

#include "qfi/binary_form.hpp"
#include "qfi/class_number.hpp"
#include "qfi/errors.hpp"
#include "qfi/integer.hpp"
#include "qfi/principality.hpp"
#include "qfi/quadratic_field.hpp"
#include "qfi/version.hpp"

#endif
