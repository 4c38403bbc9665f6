/**
 * Shapes exchanged with the recommendation service under /api/v1.
 * The service keeps its rule table server-side, so options carry only
 * an id and a label here.
 */
export {};
