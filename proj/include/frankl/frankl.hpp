#pragma once

#include "frankl/certify.hpp"
#include "frankl/circular.hpp"
#include "frankl/classes.hpp"
#include "frankl/equivalence.hpp"
#include "frankl/family.hpp"
#include "frankl/fixtures.hpp"
#include "frankl/graph.hpp"
#include "frankl/graph_io.hpp"
#include "frankl/json_io.hpp"
#include "frankl/mss.hpp"
#include "frankl/random.hpp"
