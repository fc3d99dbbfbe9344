#pragma once

#include <rw/combinatorics.hpp>
#include <rw/constructions.hpp>
#include <rw/dot.hpp>
#include <rw/error.hpp>
#include <rw/graph.hpp>
#include <rw/graph_core.hpp>
#include <rw/hyper_ramsey.hpp>
#include <rw/induced_extract.hpp>
#include <rw/io.hpp>
#include <rw/pigeonhole.hpp>
#include <rw/workflow.hpp>
