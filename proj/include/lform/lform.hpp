#pragma once

// Umbrella header: exact Hermitian/linking form algebra over Z[t^±1].

#include "lform/bezout.hpp"
#include "lform/hermitian.hpp"
#include "lform/integers.hpp"
#include "lform/intform.hpp"
#include "lform/json_io.hpp"
#include "lform/laurent.hpp"
#include "lform/linking.hpp"
#include "lform/matrix.hpp"
#include "lform/orders.hpp"
#include "lform/parse.hpp"
#include "lform/ratfun.hpp"
#include "lform/surgery.hpp"
#include "lform/torsion.hpp"
#include "lform/units.hpp"
