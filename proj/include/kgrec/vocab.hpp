#pragma once

#include <map>
#include <string>

#include "kgrec/term.hpp"

namespace kgrec::vocab {

// Namespaces of the fixed vehicle-sales vocabulary.
inline const std::string kUvso = "http://utc.fr/uvso/ns#";  // vehicle descriptions
inline const std::string kUvo = "http://utc.fr/uvo/ns#";    // vehicle lifecycle
inline const std::string kUvoo = "http://utc.fr/uvoo/ns#";  // offers and estimations
inline const std::string kUpo = "http://utc.fr/upo/ns#";    // user preferences
inline const std::string kUvd = "http://utc.fr/uvd/ns#";    // generated individuals
inline const std::string kGr = "http://purl.org/goodrelations/v1#";
inline const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string kOwl = "http://www.w3.org/2002/07/owl#";

// Prefix table shared by the rule and query parsers.
const std::map<std::string, std::string>& default_prefixes();

Iri rdf_type();
Iri owl_same_as();

// Classes.
Iri automobile();
Iri controle_technique();
Iri preference_de_vehicule();
Iri utilisateur();
Iri interaction();

// Vehicle description properties.
Iri nom();
Iri couleur();
Iri nombre_de_places();
Iri a_fabricant();
Iri style_vehicule();
Iri kilometrage_odometre();
Iri annee_du_modele();
Iri estimation();
Iri a_valeur_monetaire();
Iri a_valeur_entier();
Iri a_valeur_float();
Iri date_de_production();
Iri inspecte();
Iri valide_de();
Iri est_requis();

// User preference properties and individuals.
Iri a_preference();
Iri a_le_type_de_route_prefere();
Iri a_un_type_de_vehicule_prefere();
Iri a_le_profil();
Iri a_un_nombre_de_sieges_minimum();
Iri long_distance_route();
Iri type_suv();
Iri type_crossover();

// Interaction properties.
Iri par_utilisateur();
Iri sur_vehicule();
Iri genre_interaction();
Iri date_interaction();

}  // namespace kgrec::vocab
