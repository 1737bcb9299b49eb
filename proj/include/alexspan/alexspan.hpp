#ifndef ALEXSPAN_ALEXSPAN_HPP_
#define ALEXSPAN_ALEXSPAN_HPP_

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"
#include "alexspan/graph.hpp"
#include "alexspan/io.hpp"
#include "alexspan/kauffman.hpp"
#include "alexspan/laurent.hpp"
#include "alexspan/matrix.hpp"
#include "alexspan/planar.hpp"
#include "alexspan/random.hpp"
#include "alexspan/selftest.hpp"
#include "alexspan/skein.hpp"
#include "alexspan/spanning.hpp"

#endif  // ALEXSPAN_ALEXSPAN_HPP_
