#ifndef QJF_QJF_HPP
#define QJF_QJF_HPP

#include "qjf/decomp.hpp"
#include "qjf/errors.hpp"
#include "qjf/io_json.hpp"
#include "qjf/jseries.hpp"
#include "qjf/mock.hpp"
#include "qjf/numeric.hpp"
#include "qjf/qseries.hpp"
#include "qjf/rational.hpp"
#include "qjf/svoa.hpp"
#include "qjf/theta.hpp"
#include "qjf/verify.hpp"

#endif
