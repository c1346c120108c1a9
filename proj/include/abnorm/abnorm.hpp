#ifndef ABNORM_ABNORM_HPP
#define ABNORM_ABNORM_HPP

#include "abnorm/errors.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/golden.hpp"
#include "abnorm/random.hpp"
#include "abnorm/norms.hpp"
#include "abnorm/alphabeta.hpp"
#include "abnorm/profile.hpp"
#include "abnorm/bounds.hpp"
#include "abnorm/io.hpp"
#include "abnorm/harness.hpp"

#endif  // ABNORM_ABNORM_HPP
