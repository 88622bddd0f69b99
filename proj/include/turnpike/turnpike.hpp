#pragma once

#include "turnpike/distset.hpp"
#include "turnpike/errors.hpp"
#include "turnpike/harness.hpp"
#include "turnpike/oracle.hpp"
#include "turnpike/solver_circular.hpp"
#include "turnpike/solver_linear.hpp"
#include "turnpike/text_format.hpp"
#include "turnpike/unigraph.hpp"
