#pragma once

#include "equibouquet/certificate.hpp"
#include "equibouquet/constructions.hpp"
#include "equibouquet/embedding.hpp"
#include "equibouquet/errors.hpp"
#include "equibouquet/export.hpp"
#include "equibouquet/gf2.hpp"
#include "equibouquet/jsonio.hpp"
#include "equibouquet/linalg.hpp"
#include "equibouquet/representation.hpp"
#include "equibouquet/stereographic.hpp"
#include "equibouquet/symgroup.hpp"
#include "equibouquet/theta.hpp"
#include "equibouquet/verify.hpp"
