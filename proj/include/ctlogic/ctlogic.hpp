#ifndef CTLOGIC_CTLOGIC_HPP
#define CTLOGIC_CTLOGIC_HPP

#include "ctlogic/core.hpp"
#include "ctlogic/errors.hpp"
#include "ctlogic/gates.hpp"
#include "ctlogic/lint.hpp"
#include "ctlogic/netlist.hpp"
#include "ctlogic/parser.hpp"
#include "ctlogic/sim.hpp"
#include "ctlogic/table2.hpp"
#include "ctlogic/vcd.hpp"
#include "ctlogic/verify.hpp"

#endif  // CTLOGIC_CTLOGIC_HPP
