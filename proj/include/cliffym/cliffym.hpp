#pragma once

#include "contraction.hpp"
#include "elementary.hpp"
#include "error.hpp"
#include "field.hpp"
#include "field_vector.hpp"
#include "frame.hpp"
#include "golden.hpp"
#include "gauge.hpp"
#include "jet.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "multivector.hpp"
#include "polynomial.hpp"
#include "primitive.hpp"
#include "random_config.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "signature.hpp"
#include "verify.hpp"
#include "yang_mills.hpp"
