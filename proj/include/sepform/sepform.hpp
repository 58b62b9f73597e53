#pragma once

#include "sepform/bivar.hpp"
#include "sepform/degree.hpp"
#include "sepform/errors.hpp"
#include "sepform/gcd.hpp"
#include "sepform/modular.hpp"
#include "sepform/numbers.hpp"
#include "sepform/parse.hpp"
#include "sepform/poly.hpp"
#include "sepform/ring.hpp"
#include "sepform/rng.hpp"
#include "sepform/subresultant.hpp"
#include "sepform/separating_form.hpp"
#include "sepform/tridec.hpp"
