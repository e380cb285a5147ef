#pragma once

#include "qlink/catalog.hpp"
#include "qlink/commutator.hpp"
#include "qlink/conway.hpp"
#include "qlink/diagram.hpp"
#include "qlink/formats.hpp"
#include "qlink/freeword.hpp"
#include "qlink/int.hpp"
#include "qlink/laurent.hpp"
#include "qlink/magnus.hpp"
#include "qlink/milnor.hpp"
#include "qlink/report.hpp"
#include "qlink/tangles.hpp"
#include "qlink/trace.hpp"
#include "qlink/verify.hpp"
