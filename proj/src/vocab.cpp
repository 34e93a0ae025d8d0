#include "kgrec/vocab.hpp"

namespace kgrec::vocab {

const std::map<std::string, std::string>& default_prefixes() {
  static const std::map<std::string, std::string> kPrefixes = {
      {"uvso", kUvso}, {"uvo", kUvo}, {"uvoo", kUvoo}, {"upo", kUpo}, {"uvd", kUvd},
      {"gr", kGr},     {"rdf", kRdf}, {"xsd", kXsd},   {"owl", kOwl},
  };
  return kPrefixes;
}

Iri rdf_type() { return Iri(kRdf + "type"); }
Iri owl_same_as() { return Iri(kOwl + "sameAs"); }

Iri automobile() { return Iri(kUvso + "Automobile"); }
Iri controle_technique() { return Iri(kUvo + "ContrôleTechnique"); }
Iri preference_de_vehicule() { return Iri(kUpo + "PréférenceDeVéhicule"); }
Iri utilisateur() { return Iri(kUpo + "Utilisateur"); }
Iri interaction() { return Iri(kUpo + "Interaction"); }

Iri nom() { return Iri(kUvso + "nom"); }
Iri couleur() { return Iri(kUvso + "couleur"); }
Iri nombre_de_places() { return Iri(kUvso + "nombreDePlaces"); }
Iri a_fabricant() { return Iri(kUvso + "AFabricant"); }
Iri style_vehicule() { return Iri(kUvso + "StyleVehicule"); }
Iri kilometrage_odometre() { return Iri(kUvso + "KilometrageOdometre"); }
Iri annee_du_modele() { return Iri(kUvso + "annéeDuModèle"); }
Iri estimation() { return Iri(kUvo + "Estimation"); }
Iri a_valeur_monetaire() { return Iri(kUvoo + "aValeurMonetaire"); }
Iri a_valeur_entier() { return Iri(kGr + "aValeurEntier"); }
Iri a_valeur_float() { return Iri(kGr + "aValeurFloat"); }
Iri date_de_production() { return Iri(kUvo + "dateDeProduction"); }
Iri inspecte() { return Iri(kUvo + "inspecté"); }
Iri valide_de() { return Iri(kUvo + "valideDe"); }
Iri est_requis() { return Iri(kUvo + "estRequis"); }

Iri a_preference() { return Iri(kUpo + "aPréférence"); }
Iri a_le_type_de_route_prefere() { return Iri(kUpo + "aLeTypeDeRoutePréféré"); }
Iri a_un_type_de_vehicule_prefere() { return Iri(kUpo + "aUnTypeDeVéhiculePréféré"); }
Iri a_le_profil() { return Iri(kUpo + "aLeProfil"); }
Iri a_un_nombre_de_sieges_minimum() { return Iri(kUpo + "aUnNombreDeSiègesMinimum"); }
Iri long_distance_route() { return Iri(kUpo + "longDistanceRoute"); }
Iri type_suv() { return Iri(kUpo + "SUV"); }
Iri type_crossover() { return Iri(kUpo + "Crossover"); }

Iri par_utilisateur() { return Iri(kUpo + "parUtilisateur"); }
Iri sur_vehicule() { return Iri(kUpo + "surVéhicule"); }
Iri genre_interaction() { return Iri(kUpo + "genre"); }
Iri date_interaction() { return Iri(kUpo + "dateInteraction"); }

}  // namespace kgrec::vocab
