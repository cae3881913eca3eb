#pragma once

#include "ucyc/assembler.hpp"
#include "ucyc/class_graph.hpp"
#include "ucyc/classes.hpp"
#include "ucyc/counting.hpp"
#include "ucyc/errors.hpp"
#include "ucyc/euler.hpp"
#include "ucyc/forms.hpp"
#include "ucyc/graph_export.hpp"
#include "ucyc/transition_graph.hpp"
#include "ucyc/types.hpp"
#include "ucyc/verifier.hpp"
