#pragma once

#include "vsemi/algebra_io.hpp"
#include "vsemi/congruence.hpp"
#include "vsemi/enumeration.hpp"
#include "vsemi/finite_algebra.hpp"
#include "vsemi/normal_form.hpp"
#include "vsemi/term.hpp"
