#pragma once

#include "ampass/asymptotics.hpp"
#include "ampass/bigfloat.hpp"
#include "ampass/closed_forms.hpp"
#include "ampass/common.hpp"
#include "ampass/distribution.hpp"
#include "ampass/harmonic_expr.hpp"
#include "ampass/moment_transforms.hpp"
#include "ampass/moments.hpp"
#include "ampass/moments_large_n.hpp"
#include "ampass/numbers.hpp"
#include "ampass/poly.hpp"
#include "ampass/ratfun.hpp"
#include "ampass/rational.hpp"
#include "ampass/simulate.hpp"
#include "ampass/symbolic.hpp"
#include "ampass/verify.hpp"
