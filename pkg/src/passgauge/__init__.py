"""passgauge: hybrid-feature password strength scoring.

Engineered string features (variety score, leet-normalized entropy,
pattern and dictionary detection) combined with character TF-IDF n-grams,
feeding a from-scratch Gini random forest (logistic regression baseline).
"""

from .dataset import (
    DatasetSplit,
    IngestReport,
    PasswordRecord,
    ScalerParams,
    apply_scaler,
    fit_scaler,
    load_csv,
    smote_balance,
    stratified_split,
)
from .features import (
    NUMERIC_FEATURE_NAMES,
    BreachedDictionary,
    CharClassCounts,
    FeatureVector,
    char_class_counts,
    default_dictionary,
    detect_repeats,
    detect_sequential,
    dictionary_match,
    dynamic_charset_size,
    extract_features,
    leet_normalize,
    normalized_entropy,
    shannon_entropy,
    variety_score,
)
from .metrics import (
    MetricsReport,
    anova_f_scores,
    classification_metrics,
    confusion_matrix,
    emit_report,
    rank_features,
)
from .ngrams import NgramVocabulary, SparseVector, fit_vocabulary, transform
from .pipeline import (
    ScoreResult,
    TrainConfig,
    TrainedPipeline,
    build_recommendations,
    evaluate_pipeline,
    load_pipeline,
    save_pipeline,
    score_password,
    train_pipeline,
)

__version__ = "0.1.0"
